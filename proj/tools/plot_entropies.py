#!/usr/bin/env python3
"""Plot S_a / S_f curves from a kjc_sweep CSV.

Usage:  plot_entropies.py sweep.csv [out.png]
"""
import csv
import sys


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else None

    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        print(f"{path}: no data rows", file=sys.stderr)
        return 1

    t = [float(r["scaled_t"]) for r in rows]
    s_a = [float(r["S_a"]) for r in rows]
    s_f = [float(r["S_f"]) for r in rows]

    import matplotlib

    if out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(t, s_a, "-", label="$S_a$")
    ax.plot(t, s_f, "--", label="$S_f$")
    if "S_a_oracle" in rows[0]:
        ax.plot(t, [float(r["S_a_oracle"]) for r in rows], ":", label="$S_a$ (oracle)")
        ax.plot(t, [float(r["S_f_oracle"]) for r in rows], ":", label="$S_f$ (oracle)")
    ax.set_xlabel(r"$\lambda t/\pi$")
    ax.set_ylabel("entropy (nats)")
    ax.legend()
    fig.tight_layout()
    if out:
        fig.savefig(out, dpi=150)
        print(out)
    else:
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main())
