"""Regenerate the sample JSON files in this directory."""

from pathlib import Path

from dads import GF, PolyMatrix, Polynomial, PolyVector, SeriesVector, from_function, monomial_series
from dads.formats import matrix_to_doc, series_to_doc, write

HERE = Path(__file__).parent


def var(F, r, i):
    return Polynomial.variable(F, r, i)


def main():
    F7, F101 = GF(7), GF(101)
    X = var(F101, 1, 0)
    write(HERE / "fibonacci.json", matrix_to_doc(PolyMatrix([[X**2 - X - 1]])))
    X = var(F7, 1, 0)
    write(HERE / "constant.json", matrix_to_doc(PolyMatrix([[X - 1]])))
    write(HERE / "unit.json", matrix_to_doc(PolyMatrix([[Polynomial.one(F7, 1)]])))
    write(HERE / "one_plus_2x.json", matrix_to_doc(PolyMatrix([[1 + 2 * X]])))
    X1, X2 = var(F101, 2, 0), var(F101, 2, 1)
    write(HERE / "pascal.json", matrix_to_doc(PolyMatrix([[X1 * X2 - X1 - X2]])))
    F5 = GF(5)
    Y1, Y2 = var(F5, 2, 0), var(F5, 2, 1)
    zero = Polynomial.zero(F5, 2)
    write(HERE / "coupled.json", matrix_to_doc(PolyMatrix([[Y1 - 1, -Y2 + zero], [zero, Y2**2 - 2]])))
    write(HERE / "identity2.json", matrix_to_doc(PolyMatrix.identity(F7, 2, 2)))

    write(HERE / "coupled_series.json", series_to_doc(SeriesVector([
        from_function(F5, 2, lambda a: 2 ** a[0] + a[1], 5),
        from_function(F5, 2, lambda a: a[0] * a[1] + 1, 5),
    ])))

    write(HERE / "y21.json", series_to_doc(monomial_series(F7, (2, 1), 4)))
    write(HERE / "ones.json", series_to_doc(from_function(F7, 1, lambda a: 1, 5)))
    write(HERE / "pair2.json", series_to_doc(SeriesVector([
        from_function(F7, 2, lambda a: a[0] + 3 * a[1], 4),
        from_function(F7, 2, lambda a: (a[0] * a[1]) ** 2, 4),
    ])))


if __name__ == "__main__":
    main()
