"""Regenerate the sample decomposition documents in demos/data/.

    python3 demos/make_data.py
"""
from pathlib import Path

from tensorcert.documents import DecompositionFile
from tensorcert.samples import (
    S4C4_IDENTIFIABLE,
    random_integer_factors,
    random_integer_points,
    reznick_points,
    twisted_cubic_points,
)

DATA = Path(__file__).parent / "data"


def write(name: str, doc: DecompositionFile):
    (DATA / name).write_text(doc.dumps() + "\n")
    print("wrote", DATA / name)


def main():
    DATA.mkdir(exist_ok=True)
    write("five_factor.json", DecompositionFile(
        "rational", "general", factors=random_integer_factors((6, 5, 4, 3, 2), 18, seed=0)))
    write("rank_one.json", DecompositionFile(
        "rational", "general", factors=[[[1], [2]], [[3], ["1/2"]], [[-1], [4], [5]]]))
    write("sextic_r14.json", DecompositionFile(
        "rational", "symmetric", degree=6, weights=[1] * 14,
        points=random_integer_points(4, 14, seed=0)))
    write("quartic_r7.json", DecompositionFile(
        "rational", "symmetric", degree=4, weights=[1] * 7, points=S4C4_IDENTIFIABLE))
    write("reznick.json", DecompositionFile(
        "float", "symmetric", degree=4, weights=[1.0] * 7,
        points=reznick_points(0.0).tolist(), epsilon=1e-12))
    write("glp7.json", DecompositionFile(
        "rational", "points", points=random_integer_points(4, 7, seed=1)))
    write("twisted_cubic14.json", DecompositionFile(
        "rational", "points", points=twisted_cubic_points(range(-7, 7))))


if __name__ == "__main__":
    main()
