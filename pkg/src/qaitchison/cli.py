"""Command-line interface.

Exit codes: 0 success, 1 domain violation (bad state, dimension mismatch,
overflow), 2 I/O or parse failure.
"""

import argparse
import os
import sys

import numpy as np

from . import basis, io, modular, qubit, states
from .errors import ExpRangeError
from .linalg import EPS_PD, HERMITIAN_TOL, hermiticity_residual, hermitian_eig, hermitize

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


class DomainError(Exception):
    pass


def _load(path, eps, kind="state"):
    file_kind, m, _ = io.read(path)
    if file_kind != kind:
        raise DomainError(f"{path}: expected a {kind} file, got {file_kind}")
    if kind == "state":
        return states.density_state(m, eps=eps)
    return states.hamiltonian(m)


def _emit_matrix(args, matrix, kind="state", metadata=None):
    text = io.dumps(matrix, kind, metadata)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    kind, m, _ = io.read(args.path)
    resid = hermiticity_residual(m)
    scale = max(1.0, float(np.abs(m).max()))
    h = hermitize(m)
    w = hermitian_eig(h).eigenvalues
    tr = float(np.trace(h).real)
    problems = []
    if resid > HERMITIAN_TOL * scale:
        problems.append(f"hermiticity residual {resid:.3e} exceeds {HERMITIAN_TOL:.1e}")
    print(f"kind={kind}")
    print(f"dim={m.shape[0]}")
    print(f"hermiticity_residual={io.format_scalar(resid)}")
    if kind == "state":
        if abs(tr - 1.0) > states.TRACE_TOL:
            problems.append(f"trace deviation {tr - 1.0:.3e} exceeds {states.TRACE_TOL:.1e}")
        if w[0] <= args.eps:
            problems.append(f"minimum eigenvalue {w[0]:.3e} is not above {args.eps:.1e}")
        print(f"trace_deviation={io.format_scalar(tr - 1.0)}")
    else:
        print(f"trace={io.format_scalar(tr)}")
    print(f"min_eig={io.format_scalar(w[0])}")
    for p in problems:
        print(f"violation: {p}")
    print("valid" if not problems else "invalid")
    return EXIT_DOMAIN if problems else EXIT_OK


_BINARY = {
    "add": states.perturb,
    "sub": states.subtract,
    "tensor": lambda a, b, eps: states.tensor(a, b),
    "inner": states.inner,
    "dist": states.distance,
    "entropy": modular.relative_entropy,
}


def cmd_binary(args):
    a = _load(args.a, args.eps)
    b = _load(args.b, args.eps)
    result = _BINARY[args.command](a, b, eps=args.eps)
    if args.command in ("add", "sub", "tensor"):
        _emit_matrix(args, result)
    else:
        _emit_text(args, io.format_scalar(result) + "\n")
    return EXIT_OK


def cmd_pow(args):
    a = _load(args.path, args.eps)
    _emit_matrix(args, states.power(args.lam, a, eps=args.eps))
    return EXIT_OK


def cmd_neg(args):
    a = _load(args.path, args.eps)
    _emit_matrix(args, states.negate(a, eps=args.eps))
    return EXIT_OK


def cmd_clr(args):
    a = _load(args.path, args.eps)
    _emit_matrix(args, states.clr(a, eps=args.eps), kind="hamiltonian")
    return EXIT_OK


def cmd_gibbs(args):
    h = _load(args.path, args.eps, kind="hamiltonian")
    _emit_matrix(args, states.gibbs(h, args.beta))
    return EXIT_OK


def cmd_bloch(args):
    a = _load(args.path, args.eps)
    if a.shape != (2, 2):
        raise DomainError(f"bloch needs a 2x2 state, got dim {a.shape[0]}")
    v = qubit.state_to_bloch(a)
    _emit_text(args, " ".join(io.format_scalar(x) for x in v) + "\n")
    return EXIT_OK


def cmd_coords(args):
    a = _load(args.path, args.eps)
    c = basis.coordinates(a, eps=args.eps)
    lines = [f"{lab} {io.format_scalar(x)}" for lab, x in zip(basis.labels(a.shape[0]), c)]
    _emit_text(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_norm(args):
    a = _load(args.path, args.eps)
    _emit_text(args, io.format_scalar(states.norm(a, eps=args.eps)) + "\n")
    return EXIT_OK


def arc_table(a, b, steps, eps=EPS_PD):
    """Header and rows of the arc CSV from ``b`` (t=0) to ``a`` (t=1)."""
    n = a.shape[0]
    if n == 2:
        header = ["t", "x", "y", "z"]
        project = qubit.state_to_bloch
    else:
        header = ["t"] + [str(lab) for lab in basis.labels(n)]

        def project(d):
            return basis.coordinates(d, eps=eps)

    rows = []
    for i in range(steps):
        t = i / (steps - 1)
        rows.append([t, *project(states.arc(a, b, t, eps=eps))])
    return header, rows


def cmd_arc(args):
    if args.steps < 2:
        raise DomainError("--steps must be at least 2")
    a = _load(args.a, args.eps)
    b = _load(args.b, args.eps)
    if a.shape != b.shape:
        raise DomainError(f"dimensions {a.shape[0]} and {b.shape[0]} differ")
    header, rows = arc_table(a, b, args.steps, eps=args.eps)
    lines = [",".join(header)]
    lines += [",".join(io.format_float(x) for x in row) for row in rows]
    _emit_text(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_basis(args):
    n = args.dim
    if not 2 <= n <= 16:
        raise DomainError(f"--dim must lie in [2, 16], got {n}")
    if not args.out:
        raise DomainError("basis needs an output directory (-o/--out)")
    os.makedirs(args.out, exist_ok=True)
    labs = basis.labels(n)
    elems = basis.full_basis(n)
    for lab, d in zip(labs, elems):
        io.write(os.path.join(args.out, f"{lab}.json"), d, metadata={"label": str(lab), "n": str(n)})
    gram = states.gram(elems, eps=args.eps)
    off = np.abs(gram - np.diag(np.diag(gram))).max(initial=0.0)
    diag = np.abs(np.diag(gram) - 1.0).max()
    report = (
        f"n={n}\n"
        f"size={len(labs)}\n"
        f"max_offdiag={io.format_scalar(off)}\n"
        f"max_diag_deviation={io.format_scalar(diag)}\n"
    )
    with open(os.path.join(args.out, "gram.txt"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(report)
    sys.stdout.write(report)
    return EXIT_OK if max(off, diag) <= 1e-9 else EXIT_DOMAIN


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=argparse.SUPPRESS,
                        help=f"positive-definiteness threshold (default {EPS_PD:g})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized commands (reserved)")

    parser = argparse.ArgumentParser(prog="qaitchison", parents=[common],
                                     description="Aitchison geometry of quantum states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, out=True):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        if out:
            p.add_argument("-o", "--out", default=None, help="output path (default stdout)")
        return p

    p = add("validate", cmd_validate, "check a matrix file", out=False)
    p.add_argument("path")

    for name, help in [
        ("add", "perturbation A + B"),
        ("sub", "difference A - B"),
        ("tensor", "tensor product"),
        ("inner", "Aitchison inner product"),
        ("dist", "Aitchison distance"),
        ("entropy", "relative entropy S(A, B) in nats"),
    ]:
        p = add(name, cmd_binary, help)
        p.add_argument("a")
        p.add_argument("b")

    p = add("pow", cmd_pow, "powering lam . A")
    p.add_argument("lam", type=float)
    p.add_argument("path")
    for name, func, help in [
        ("neg", cmd_neg, "additive inverse"),
        ("clr", cmd_clr, "centered log-ratio (writes a Hamiltonian file)"),
        ("bloch", cmd_bloch, "Bloch vector of a qubit state"),
        ("coords", cmd_coords, "coordinates in the orthonormal basis"),
        ("norm", cmd_norm, "Aitchison norm"),
    ]:
        p = add(name, func, help)
        p.add_argument("path")
    p = add("gibbs", cmd_gibbs, "Gibbs state of a Hamiltonian file")
    p.add_argument("path")
    p.add_argument("--beta", type=float, default=1.0)

    p = add("arc", cmd_arc, "sample the arc (t . A) + ((1 - t) . B) as CSV")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--steps", type=int, default=11)

    p = add("basis", cmd_basis, "write the orthonormal basis for dimension --dim")
    p.add_argument("--dim", type=int, required=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    # parents share action objects, so defaults are filled here, not via set_defaults
    for name, value in (("eps", EPS_PD), ("seed", None)):
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.func(args)
    except (io.StateFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, ValueError, ExpRangeError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
