"""Walk through the genus calibration: which parameter conventions reproduce
phi(W2) = 24a2, phi(W3) = a3, phi(W4) = 6a2^2 - a4, and why the printed curve
needs its a1*a3 sign flipped.

    python demos/genus_calibration.py
"""
from slcob import genus


def main():
    for name, make in genus.CURVES.items():
        c = make()
        shift, g2, g3 = genus.weierstrass_invariants(c)
        print(f"{name}: {c.equation()}")
        print(f"    g2 = {g2}    g3 = {g3}")

    report = genus.calibration_report()
    print("\ntrials (in order):")
    for t in report["trials"]:
        vals = ", ".join(f"W{k}: {v}" for k, v in sorted(t["values"].items()))
        print(f"  {'ok ' if t['ok'] else '   '} {t['convention']:<38} {vals}")
    print(f"\nselected: {report['selected']}\n  {report['description']}")

    g = genus.curve_log(N=8)
    print("\nlog Q(u) coefficients:")
    for k in range(1, 9):
        print(f"  u^{k}: {g.log_q[k]}")


if __name__ == "__main__":
    main()
