"""Round-trip the text certificate formats.

Every value the library reports is backed by a replayable certificate: a
PACKCERT lists weighted monochromatic triangles of both colours and claims a
lower bound on the total covered edge weight; a COVERCERT lists weighted
edges covering every monochromatic triangle of one colour and claims an
upper bound on that colour's fractional packing value.  Together they pin
the exact optimum.  This demo computes both for a small blow-up, verifies
them, then tampers with a weight to show the verifier catching it.
"""

from monopack import BlobSpec, nu_star, pack, pentagon_blowup
from monopack.certs import (
    format_covercert,
    format_packcert,
    verify_covercert,
    verify_packcert,
)
from monopack.graph import RED


def main() -> None:
    g, _ = pentagon_blowup(BlobSpec((2, 2, 2, 2, 2)))
    result = pack(g)
    print(f"pack = {result.value} on the (2,2,2,2,2) blow-up\n")

    packcert = format_packcert(g, result.red.packing, result.blue.packing)
    print("PACKCERT (first lines):")
    for line in packcert.splitlines()[:6]:
        print(f"  {line}")
    ok, msg = verify_packcert(packcert, g)
    print(f"  -> {msg}\n")
    assert ok

    cover = nu_star(g, RED).cover
    covercert = format_covercert(g, cover)
    print("COVERCERT (first lines):")
    for line in covercert.splitlines()[:6]:
        print(f"  {line}")
    ok, msg = verify_covercert(covercert, g)
    print(f"  -> {msg}\n")
    assert ok

    # lower one cover weight: some triangle is no longer covered to 1
    lines = covercert.splitlines()
    edge_line = lines[4].split()
    tampered = "\n".join(lines[:4] + [f"{edge_line[0]} {edge_line[1]} 0"] + lines[5:]) + "\n"
    ok, msg = verify_covercert(tampered, g)
    print(f"tampered COVERCERT -> ok={ok}: {msg}")
    assert not ok


if __name__ == "__main__":
    main()
