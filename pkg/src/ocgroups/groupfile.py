"""Plain-text group files.

::

    degree 3
    # one generator per line, 1-based images
    2 3 1
    2 1 3
"""

from __future__ import annotations

from .perm import Permutation
from .permgroup import PermGroup


class GroupFileError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_group_file(text: str, name: str | None = None) -> PermGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GroupFileError(lineno, f"expected 'degree <n>', got {line!r}")
            try:
                degree = int(parts[1])
            except ValueError:
                raise GroupFileError(lineno, f"bad degree {parts[1]!r}") from None
            if degree < 1:
                raise GroupFileError(lineno, "degree must be >= 1")
            continue
        try:
            images = [int(tok) for tok in line.split()]
        except ValueError:
            raise GroupFileError(lineno, f"non-integer image in {line!r}") from None
        if len(images) != degree:
            raise GroupFileError(lineno, f"expected {degree} images, got {len(images)}")
        bad = [x for x in images if not 1 <= x <= degree]
        if bad:
            raise GroupFileError(lineno, f"image {bad[0]} out of range 1..{degree}")
        if len(set(images)) != degree:
            raise GroupFileError(lineno, "images do not form a bijection")
        gens.append(Permutation(images))
    if degree is None:
        raise GroupFileError(0, "missing 'degree <n>' header")
    return PermGroup(gens, degree=degree, name=name)


def write_group_file(G: PermGroup) -> str:
    lines = []
    if G.name:
        lines.append(f"# {G.name}")
    lines.append(f"degree {G.degree}")
    for g in G.generators:
        if not g.is_identity():
            lines.append(" ".join(map(str, g.images)))
    return "\n".join(lines) + "\n"


def load_group_file(path) -> PermGroup:
    with open(path, encoding="utf-8") as fh:
        return parse_group_file(fh.read(), name=str(path))
