"""Regenerate the packaged fixture data files.

The published tables of extremal restricted bases abbreviate long runs of
equally spaced elements as `x ... y (+c)`.  This script holds the rows in
that compact form, expands the runs, re-verifies every row from first
principles (length, range, restrictedness, symmetry), and writes the
expanded plain-text files the package ships under src/addbasis/data/.

Run from the repository root:  python tools/transcribe_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from addbasis.core import as_basis, classify  # noqa: E402

# (length, range, S|A, compact element string; "+c" expands the gap
# between its neighbours in steps of c)
RESTRICTED_ROWS = [
    (1, 2, "S", "0 1"),
    (2, 4, "S", "0 1 2"),
    (3, 8, "S", "0 1 3 4"),
    (4, 12, "S", "0 1 3 5 6"),
    (5, 16, "S", "0 1 3 5 7 8"),
    (6, 20, "S", "0 1 2 5 8 9 10"),
    (6, 20, "S", "0 1 3 5 7 9 10"),
    (7, 26, "S", "0 1 2 5 8 11 12 13"),
    (7, 26, "S", "0 1 3 4 9 10 12 13"),
    (8, 32, "S", "0 1 2 5 8 11 14 15 16"),
    (9, 40, "S", "0 1 3 4 9 11 16 17 19 20"),
    (10, 44, "A", "0 1 2 3 7 11 15 17 20 21 22"),
    (10, 44, "S", "0 1 2 3 7 11 15 19 20 21 22"),
    (10, 44, "S", "0 1 2 5 7 11 15 17 20 21 22"),
    (10, 44, "A", "0 1 2 5 7 11 15 19 20 21 22"),
    (10, 44, "S", "0 1 2 5 8 11 14 17 20 21 22"),
    (10, 44, "A", "0 1 3 4 6 11 13 18 19 21 22"),
    (10, 44, "S", "0 1 3 4 9 11 13 18 19 21 22"),
    (10, 44, "A", "0 1 3 4 9 11 16 18 19 21 22"),
    (11, 54, "S", "0 1 3 4 9 11 16 18 23 24 26 27"),
    (11, 54, "S", "0 1 3 5 6 13 14 21 22 24 26 27"),
    (12, 64, "S", "0 1 3 4 9 11 16 21 23 28 29 31 32"),
    (13, 72, "S", "0 1 3 4 9 11 16 20 25 27 32 33 35 36"),
    (14, 80, "S", "0 1 3 4 5 8 +6 32 35 36 37 39 40"),
    (15, 92, "S", "0 1 3 4 5 8 +6 38 41 42 43 45 46"),
    (16, 104, "S", "0 1 3 4 5 8 +6 44 47 48 49 51 52"),
    (17, 116, "S", "0 1 3 4 5 8 +6 50 53 54 55 57 58"),
    (18, 128, "S", "0 1 3 4 5 8 +6 56 59 60 61 63 64"),
    (19, 140, "S", "0 1 3 4 5 8 +6 62 65 66 67 69 70"),
    (20, 152, "S", "0 1 3 4 5 8 +6 68 71 72 73 75 76"),
    (21, 164, "S", "0 1 3 4 5 8 +6 74 77 78 79 81 82"),
    (21, 164, "S", "0 1 3 4 6 10 13 15 21 +8 61 67 69 72 76 78 79 81 82"),
    (22, 180, "S", "0 1 3 4 6 10 13 15 21 +8 69 75 77 80 84 86 87 89 90"),
    (23, 196, "S", "0 1 3 4 6 10 13 15 21 +8 77 83 85 88 92 94 95 97 98"),
    (24, 212, "S", "0 1 3 4 6 10 13 15 21 +8 85 91 93 96 100 102 103 105 106"),
    (25, 228, "S", "0 1 3 4 6 10 13 15 21 +8 93 99 101 104 108 110 111 113 114"),
    (26, 244, "S", "0 1 3 4 6 10 13 15 21 +8 101 107 109 112 116 118 119 121 122"),
    (26, 244, "S", "0 1 3 4 5 8 11 15 16 +9 106 107 111 114 117 118 119 121 122"),
    (27, 262, "S", "0 1 3 4 5 8 11 15 16 +9 115 116 120 123 126 127 128 130 131"),
    (28, 280, "S", "0 1 3 4 5 8 11 15 16 +9 124 125 129 132 135 136 137 139 140"),
    (29, 298, "S", "0 1 3 4 5 8 11 15 16 +9 133 134 138 141 144 145 146 148 149"),
    (30, 316, "S", "0 1 3 4 5 8 11 15 16 25 34 +9 124 133 142 143 147 150 153 154 155 157 158"),
    (30, 316, "S", "0 1 2 5 6 8 13 14 17 19 29 +10 129 139 141 144 145 150 152 153 156 157 158"),
    (30, 316, "A", "0 1 2 5 6 8 13 14 17 19 29 +10 129 133 139 141 146 150 152 154 155 157 158"),
    (30, 316, "A", "0 1 3 4 6 8 12 17 19 25 29 +10 129 139 141 144 145 150 152 153 156 157 158"),
    (30, 316, "S", "0 1 3 4 6 8 12 17 19 25 29 +10 129 133 139 141 146 150 152 154 155 157 158"),
    (30, 316, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 134 137 141 142 149 150 151 154 155 157 158"),
    (31, 338, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 145 148 152 153 160 161 162 165 166 168 169"),
    (32, 360, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 156 159 163 164 171 172 173 176 177 179 180"),
    (33, 382, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 167 170 174 175 182 183 184 187 188 190 191"),
    (34, 404, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 178 181 185 186 193 194 195 198 199 201 202"),
    (35, 426, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 189 192 196 197 204 205 206 209 210 212 213"),
    (36, 448, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 200 203 207 208 215 216 217 220 221 223 224"),
    (37, 470, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 211 214 218 219 226 227 228 231 232 234 235"),
    (38, 492, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 222 225 229 230 237 238 239 242 243 245 246"),
    (39, 514, "S", "0 1 3 4 7 8 9 16 17 21 24 +11 233 236 240 241 248 249 250 253 254 256 257"),
    (40, 536, "S", "0 1 3 4 7 8 9 16 17 21 24 35 46 +11 222 233 244 247 251 252 259 260 261 264 265 267 268"),
    (40, 536, "S", "0 1 2 5 7 10 11 19 21 22 25 29 30 +13 238 239 243 246 247 249 257 258 261 263 266 267 268"),
    (41, 562, "S", "0 1 2 5 7 10 11 19 21 22 25 29 30 +13 251 252 256 259 260 262 270 271 274 276 279 280 281"),
]

# length 10 is the first where the extremal range (46) is not attained by
# any restricted basis; these two asymmetric bases attain it
UNRESTRICTED_ROWS = [
    (10, 46, "A", "0 1 2 3 7 11 15 19 21 22 24"),
    (10, 46, "A", "0 1 2 5 7 11 15 19 21 22 24"),
]


def expand(compact: str) -> tuple[int, ...]:
    out: list[int] = []
    step = None
    for token in compact.split():
        if token.startswith("+"):
            if step is not None or not out:
                raise ValueError(f"misplaced run marker in {compact!r}")
            step = int(token[1:])
            continue
        value = int(token)
        if step is not None:
            span = value - out[-1]
            if span <= 0 or span % step != 0:
                raise ValueError(f"run {out[-1]} +{step} {value} does not divide")
            out.extend(range(out[-1] + step, value, step))
            step = None
        out.append(value)
    if step is not None:
        raise ValueError(f"dangling run marker in {compact!r}")
    return tuple(out)


def verify(length: int, rng: int, tag: str, basis: tuple[int, ...], restricted: bool) -> None:
    basis = as_basis(basis)
    if len(basis) != length + 1:
        raise ValueError(f"k={length}: expanded to {len(basis)} elements: {basis}")
    cls = classify(basis)
    if cls.range != rng:
        raise ValueError(f"k={length}: range {cls.range} != {rng}: {basis}")
    if cls.restricted != restricted:
        raise ValueError(f"k={length}: restricted={cls.restricted}, expected {restricted}")
    if cls.symmetric != (tag == "S"):
        raise ValueError(f"k={length}: symmetric={cls.symmetric}, tagged {tag}")


def emit(rows, path: Path, restricted: bool, title: str) -> None:
    lines = [
        f"# {title}",
        "# columns: k range S|A elements...",
    ]
    for length, rng, tag, compact in rows:
        basis = expand(compact)
        verify(length, rng, tag, basis, restricted)
        lines.append(f"{length} {rng} {tag} " + " ".join(str(a) for a in basis))
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def main() -> None:
    data = Path(__file__).resolve().parents[1] / "src" / "addbasis" / "data"
    data.mkdir(parents=True, exist_ok=True)
    emit(
        RESTRICTED_ROWS,
        data / "restricted_extremal.txt",
        restricted=True,
        title="Extremal restricted additive 2-bases, lengths 1..41.",
    )
    emit(
        UNRESTRICTED_ROWS,
        data / "unrestricted_extremal.txt",
        restricted=False,
        title="Extremal (nonrestricted) additive 2-bases where they beat the restricted range.",
    )


if __name__ == "__main__":
    main()
