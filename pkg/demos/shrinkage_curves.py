"""Walk through the singular value shrinkage rule for a few penalties.

The penalty charges each nonzero singular value 2*a_i*s + b_i. Applied
through the closed-form shrinkage this either subtracts a_i from the
value or zeroes it outright, with the jump located at a_i + sqrt(b_i).
Run the script to print the value curves on a coarse grid.
"""

import numpy as np

from rankrelax import make_weights, preset, shrink_spectrum


def curve(w, points):
    return np.array([shrink_spectrum(np.array([s]), w)[0] for s in points])


def main():
    points = np.linspace(0.0, 2.0, 21)

    print("soft thresholding (a=0.5, b=0):")
    soft = make_weights([0.5], [0.0])
    for s, out in zip(points, curve(soft, points)):
        print("  %.2f -> %.3f" % (s, out))

    print()
    print("hard thresholding (a=0, b=0.25) keeps values above sqrt(b)=0.5:")
    hard = make_weights([0.0], [0.25])
    for s, out in zip(points, curve(hard, points)):
        print("  %.2f -> %.3f" % (s, out))

    print()
    print("mixed rule (a=0.25, b=0.25): jump at 0.5, kept values lose a:")
    mixed = make_weights([0.25], [0.25])
    for s in (0.6, 0.75, 1.5):
        print("  %.2f -> %.4f" % (s, shrink_spectrum(np.array([s]), mixed)[0]))

    print()
    print("rank-1 projection via the hard_rank preset on spectrum (3, 1, 0.2):")
    w = preset("hard_rank", 3, rank=1)
    print("  ", shrink_spectrum(np.array([3.0, 1.0, 0.2]), w))


if __name__ == "__main__":
    main()
