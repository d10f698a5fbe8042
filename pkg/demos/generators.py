"""Search for SL-cobordism generator witnesses in degrees 2..10 and print the
s_n values with the required form.

    python demos/generators.py
"""
from slcob import lazard


def describe(desc):
    return f"deg {desc['d']} in " + " x ".join(f"P{n}" for n in desc["n"])


def main():
    for n in range(2, 11):
        rep = lazard.generator_search(n)
        parts = " + ".join(f"{c}*[{describe(d)}]" for c, d in rep.witness)
        tag = "CY" if rep.calabi_yau else "  "
        print(f"n={n:<3} s_n={str(rep.s_value):>12}  {rep.required_form:<10} {tag} {parts}")


if __name__ == "__main__":
    main()
