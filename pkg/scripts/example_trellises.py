"""Rebuild the two example trellises, print their state profiles, write DOT files."""

import argparse
from pathlib import Path

from stabtrellis import StabilizerCode, build_wolf_trellis, export_dot, state_profile

EXAMPLES = {
    "four_qubit": (["XXXX", "ZZZZ"], "00"),
    "five_qubit": (["ZXIII", "XZXII", "IXZXI", "IIXZX"], "0011"),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("trellis_out"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (words, s) in EXAMPLES.items():
        t = build_wolf_trellis(StabilizerCode.from_strings(words), s)
        path = args.out / f"{name}.dot"
        path.write_text(export_dot(t, name))
        print(f"{name:11s} s={s}  |V_i|={','.join(map(str, t.sizes))}  xi={state_profile(t)}  "
              f"edges={t.num_edges}  -> {path}")


if __name__ == "__main__":
    main()
