"""Compare the compiled and pure-Python Jacobi kernels.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]

Prints per-call timings for raw kernel calls at several sizes, then the
wall time of a small fig2 sweep under each backend (run in a subprocess so
the import-time backend selection is honoured).
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from werner_teleport import _kernels, linalg

SWEEP = (
    "import time; from werner_teleport import cli;"
    "t = time.perf_counter();"
    "cli.main(['fig2', '--e12-steps', '21', '--ew-steps', '21', '--out', os.devnull]);"
    "print(time.perf_counter() - t)"
)


def random_hermitian(rng, d):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def kernel_table(repeat):
    rng = np.random.default_rng(0)
    kernels = {"python": _kernels.python_jacobi_eigvalsh}
    if _kernels.compiled_jacobi_eigvalsh is not None:
        kernels["cython"] = _kernels.compiled_jacobi_eigvalsh
    print(f"{'dim':>4} " + " ".join(f"{name:>12}" for name in kernels) + "   speedup")
    for dim in (4, 8, 16, 32, 64):
        h = random_hermitian(rng, dim)
        number = max(1, repeat // dim)
        times = {}
        for name, fn in kernels.items():
            t = timeit.timeit(lambda: fn(h, linalg.EIG_TOL, linalg.MAX_JACOBI_SWEEPS), number=number)
            times[name] = t / number
        cells = " ".join(f"{times[n] * 1e6:10.1f}us" for n in kernels)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
        print(f"{dim:>4} {cells} {speed}")


def sweep_table():
    print("\nfig2 21x21 sweep (oracle + formula):")
    for label, flag in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, WERNER_TELEPORT_PURE_PYTHON=flag)
        out = subprocess.run(
            [sys.executable, "-c", "import os;" + SWEEP], env=env, capture_output=True, text=True, check=True
        )
        print(f"  {label:>7}: {float(out.stdout):.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=2000)
    args = ap.parse_args()
    print(f"default backend: {_kernels.BACKEND}")
    kernel_table(args.repeat)
    sweep_table()


if __name__ == "__main__":
    main()
