#!/usr/bin/env python3
"""Survey the one-dimensional sector of the S_n families.

For each datum: the class census of the rack square, the characters
admitting extensions (always with vanishing rack scalars here), and the
extension-space dimensions between them, computed both from the scalar
linear system and from the generic matrix-level Ext solver.

Run:  python scripts/onedim_census.py [max_n]
"""

import sys
from collections import Counter

from qlhopf.extquiver import ext1_dim
from qlhopf.onedim import build_S, ext_space_1dim, one_dim_census
from qlhopf.qldata import cached_builtin


def survey(datum) -> None:
    sizes = Counter(c.size for c in datum.classes)
    rprime = sum(1 for c in datum.classes if c.in_rprime)
    print(f"{datum.name}: |X|={datum.rack.size}, classes {dict(sorted(sizes.items()))}, "
          f"{rprime} in R'")
    census = one_dim_census(datum)
    mods = {}
    for name, exts in census:
        print(f"  {name}: {len(exts)} extension(s), "
              f"gamma {'= 0' if exts and exts[0].is_zero_family else 'families'}")
        if exts:
            mods[name] = (exts[0], build_S(datum, exts[0]))
    for a in sorted(mods):
        for b in sorted(mods):
            scalar_dim, _ = ext_space_1dim(datum, mods[a][0], mods[b][0])
            generic_dim, _ = ext1_dim(datum, mods[a][1], mods[b][1])
            flag = "" if scalar_dim == generic_dim else "  <- DISAGREEMENT"
            print(f"  ext({a} -> {b}) = {scalar_dim} (generic {generic_dim}){flag}")


def main() -> int:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    survey(cached_builtin("Q3_minus", lam=1))
    for n in range(4, max_n + 1):
        survey(cached_builtin("Qn_minus", n, Lam=1, Gam=1))
        survey(cached_builtin("Qn_chi", n, lam=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
