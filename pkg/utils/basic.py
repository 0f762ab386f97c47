## A collection of small helpers shared by the chip-firing modules
import click
import numpy as np

PRINT_SEP = "  "  # spaces to prepend to progress lines

# numpy products are only trusted below this magnitude
INT64_SAFE = 2**62


def progress(message, verbose=True):
    """Print a progress line to stderr (stdout is kept for results)."""
    if verbose:
        click.echo("{0}{1}".format(PRINT_SEP, message), err=True)


def positive_part(x):
    return x if x > 0 else 0


def triangular(n):
    """n(n+1)/2"""
    return n * (n + 1) // 2


def make_rng(seed):
    """Seeded numpy generator. PCG64 streams are identical across platforms."""
    return np.random.Generator(np.random.PCG64(seed))


def as_int64(values):
    """Convert a sequence of Python ints to an int64 array.

    Raises OverflowError if any entry is too large for the products that
    follow to stay exact.
    """
    values = list(values)
    if values and max(abs(v) for v in values) >= INT64_SAFE:
        raise OverflowError("coefficient outside the checked int64 range")
    return np.array(values, dtype=np.int64)


def checked_matvec(matrix, values):
    """Exact integer product `matrix @ values` returned as Python ints.

    Keyword arguments:
    matrix -- int64 numpy array
    values -- sequence of Python ints
    """
    vector = as_int64(values)
    bound = int(np.abs(matrix).sum(axis=1).max()) if matrix.size else 0
    if vector.size and bound * int(np.abs(vector).max()) >= INT64_SAFE:
        raise OverflowError("Laplacian product would leave the int64 range")
    return [int(x) for x in matrix.dot(vector)]
