"""Orders of short words in the D4 fixture, with sections of a few squares."""

from itertools import product

from spinal.fixtures import d4
from spinal.order import order_of
from spinal.selfsim import power, section


def main() -> None:
    G = d4()
    rooted = [G.name_of(a) for a in G.A.elements if not a.is_identity()]
    for r1, r2 in product(["1"] + rooted, repeat=2):
        word = " ".join(w for w in ("b", r1, "b", r2) if w != "1")
        print(f"ord({word}) = {order_of(G.element(word))}")
    for word in ("b s", "b s r"):
        sq = power(G.element(word), 2)
        secs = ", ".join(G.format_word(section(sq, x)) for x in range(4))
        print(f"sections of ({word})^2: {secs}")


if __name__ == "__main__":
    main()
