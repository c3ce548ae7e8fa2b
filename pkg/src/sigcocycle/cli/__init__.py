"""Command line front end.

Exit codes: 0 success, 1 computation-domain error (not periodic, not
Torelli), 2 usage or parse error, 3 internal-consistency failure (asymmetric
pairing, failed calibration, failed property suite).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .. import linalg
from ..calibration import check_calibration
from ..casson import DISCLAIMER, d0_bscc_closed_form, d0_word
from ..cocycle import DEFAULT_J_SIGN, bilinear_space
from ..errors import GenusMismatch, InputError, NotPeriodic, SigCocycleError
from ..meyer import assert_integrality, phi, phi_powers
from ..spectral import (PERIODIC, SL2, classify_sl2, eta_periodic,
                        hyperelliptic_obstruction, matrix_order, rho_estimate, rho_sl2)
from ..verify import verify_suite
from ..words import Word, eval_word, sl2_word
from .parser import Psi, format_word, parse_expr, expand
from .report import InvariantReport, format_rational

__all__ = ["main", "run", "load_matrix_document"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def load_matrix_document(path: str) -> tuple[int, linalg.Matrix]:
    """Read ``{"genus": g, "entries": [[...], ...]}`` and check it is symplectic."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"genus", "entries"}:
        raise InputError(f"{path}: expected an object with keys 'genus' and 'entries'")
    g, entries = doc["genus"], doc["entries"]
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise InputError(f"{path}: genus must be a positive integer")
    n = 2 * g
    if (not isinstance(entries, list) or len(entries) != n
            or any(not isinstance(row, list) or len(row) != n for row in entries)
            or any(not isinstance(x, int) or isinstance(x, bool) for row in entries for x in row)):
        raise InputError(f"{path}: entries must be a {n}x{n} array of integers")
    M = linalg.freeze(entries)
    if not linalg.is_symplectic(M):
        raise InputError(f"{path}: matrix is not symplectic")
    return g, M


def _genus(args) -> int:
    genera = set()
    if args.genus is not None:
        genera.add(args.genus)
    for attr in ("matrix", "matrix2"):
        path = getattr(args, attr, None)
        if path:
            genera.add(load_matrix_document(path)[0])
    if not genera:
        raise _UsageError("--genus is required unless a matrix file is given")
    if len(genera) > 1:
        raise GenusMismatch(f"conflicting genera {sorted(genera)}")
    g = genera.pop()
    if g < 1:
        raise _UsageError("--genus must be >= 1")
    return g


def _word(text: str, g: int) -> Word:
    return expand(parse_expr(text), g)


def _element(args, g, word_attr="word", matrix_attr="matrix"):
    """(word or None, matrix) from the word/matrix flags."""
    text, path = getattr(args, word_attr, None), getattr(args, matrix_attr, None)
    if text is not None and path is not None:
        raise _UsageError(f"give either --{word_attr} or --{matrix_attr}, not both")
    if text is not None:
        w = _word(text, g)
        return w, eval_word(w)
    if path is not None:
        return None, load_matrix_document(path)[1]
    raise _UsageError(f"--{word_attr} or --{matrix_attr} is required")


def _word_for(args, g) -> tuple[Word, dict]:
    """A word for the input, realizing a genus-1 matrix when needed."""
    w, M = _element(args, g)
    if w is not None:
        return w, {"genus": g, "word": args.word}
    if g != 1:
        raise _UsageError("matrix input needs genus 1 here; give --word instead")
    w = sl2_word(M)
    return w, {"genus": g, "matrix": [list(r) for r in M], "realized_word": format_word(w)}


def _echo(args, g, **extra):
    out = {"genus": g}
    for attr in ("word", "matrix", "word2", "matrix2"):
        v = getattr(args, attr, None)
        if v is not None:
            out[attr] = v
    out.update(extra)
    return out


# -- subcommands -----------------------------------------------------------

def _cmd_tau(args):
    g = _genus(args)
    _, A = _element(args, g)
    _, B = _element(args, g, "word2", "matrix2")
    space = bilinear_space(A, B, j_sign=args.j_sign)
    sig = linalg.signature(space.gram) if space.basis else linalg.SignatureTriple(0, 0, 0)
    return [InvariantReport("tau", _echo(args, g), Fraction(sig.signature), "signature of pairing on V_AB",
                            details={"dim_V": space.dimension, "positive": sig.positive,
                                     "negative": sig.negative, "null": sig.null})]


def _cmd_phi(args):
    g = _genus(args)
    w, echo = _word_for(args, g)
    value = phi(w, j_sign=args.j_sign)
    return [InvariantReport("phi", echo, value, "coboundary fold over word",
                            details={"word_length": len(w),
                                     "in_1/(2g+1)Z": assert_integrality(value, g)})]


def _cmd_eta(args):
    g = _genus(args)
    w, M = _element(args, g)
    n = args.order if args.order is not None else matrix_order(M)
    if n is None:
        raise NotPeriodic(f"matrix has no finite order <= {12 * g}")
    eta = eta_periodic(M, n, j_sign=args.j_sign)
    ok = hyperelliptic_obstruction(eta, g)
    details = {"order": n, "in_1/(2g+1)Z": ok}
    if w is not None:
        details["phi"] = phi(w, j_sign=args.j_sign)
    warnings = [] if ok else ["eta is not in (1/(2g+1))Z: the periodic map cannot commute "
                              "with the hyperelliptic involution"]
    return [InvariantReport("eta", _echo(args, g), eta, "average of tau(f, f^k)",
                            warnings, details)]


def _cmd_rho(args):
    g = _genus(args)
    w, M = _element(args, g)
    echo = _echo(args, g)
    if w is None:
        if g != 1:
            raise _UsageError("matrix input for rho needs genus 1; give --word instead")
        closed = rho_sl2(M, j_sign=args.j_sign)
        if closed is not None:
            return [InvariantReport("rho", echo, closed, SL2,
                                    details={"class": classify_sl2(M)})]
        w = sl2_word(M)
        echo["realized_word"] = format_word(w)
    report = rho_estimate(w, K=args.limit, window=args.window, j_sign=args.j_sign)
    details = {"sequence": [[k, s] for k, s in report.sequence]}
    if report.method != PERIODIC and g == 1:
        closed = rho_sl2(M, j_sign=args.j_sign)
        if closed is not None:
            details["class"] = classify_sl2(M)
            return [InvariantReport("rho", echo, closed, SL2, details=details)]
    warnings = []
    if report.method == PERIODIC:
        warnings.append("periodicity inferred from homology order and phi(f^n) = 0")
    if report.detected_limit is None:
        warnings.append(f"no exact tail pattern within K={args.limit}; limit not certified")
    value = report.detected_limit if report.detected_limit is not None else "undetermined"
    return [InvariantReport("rho", echo, value, report.method, warnings, details)]


def _cmd_d0(args):
    g = _genus(args)
    if args.word is None:
        raise _UsageError("--word is required")
    terms = parse_expr(args.word)
    w = expand(terms, g)
    value = d0_word(w)
    details = {"phi": value / 3}
    warnings = [DISCLAIMER]
    if len(terms) == 1 and isinstance(terms[0].atom, Psi):
        details["closed_form"] = terms[0].exponent * d0_bscc_closed_form(g, terms[0].atom.h)
    else:
        warnings.append("membership in the BSCC subgroup is trusted; only homology is checked")
    return [InvariantReport("d0", _echo(args, g), value, "3 * phi", warnings, details)]


def _cmd_classify(args):
    g = _genus(args)
    if g != 1:
        raise GenusMismatch("classify is only defined in genus 1")
    _, M = _element(args, g)
    return [InvariantReport("classify", _echo(args, g), classify_sl2(M), "absolute trace",
                            details={"trace": M[0][0] + M[1][1]})]


def _cmd_verify(args):
    g = _genus(args)
    if args.cases < 1:
        raise _UsageError("--cases must be >= 1")
    report = verify_suite(g, args.cases, args.seed, max_length=args.max_length,
                          j_sign=args.j_sign)
    out = []
    for r in report.results:
        details = {"checked": r.checked, "failures": r.failures}
        if r.counterexample is not None:
            details["counterexample"] = r.counterexample
        out.append(InvariantReport("verify", {"genus": g, "cases": args.cases, "seed": args.seed,
                                              "property": r.name},
                                   "pass" if r.passed else "FAIL", "seeded property check",
                                   details=details))
    return out, (0 if report.passed else 3)


COMMANDS = {
    "tau": _cmd_tau, "phi": _cmd_phi, "eta": _cmd_eta, "rho": _cmd_rho,
    "d0": _cmd_d0, "classify": _cmd_classify, "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int)
    common.add_argument("--json", action="store_true", help="one JSON object per result")
    common.add_argument("--decimal", action="store_true",
                        help="also print a decimal approximation, marked approx")
    common.add_argument("--j-sign", type=int, choices=(1, -1), default=DEFAULT_J_SIGN,
                        help="sign of the complex structure J (calibrated default: 1)")

    parser = _ArgumentParser(prog="sigcocycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def element(p, second=False):
        p.add_argument("--word")
        p.add_argument("--matrix", metavar="FILE")
        if second:
            p.add_argument("--word2")
            p.add_argument("--matrix2", metavar="FILE")

    element(sub.add_parser("tau", parents=[common], help="signature cocycle"), second=True)
    element(sub.add_parser("phi", parents=[common], help="Meyer's function"))
    p = sub.add_parser("eta", parents=[common], help="eta of a periodic mapping torus")
    element(p)
    p.add_argument("--order", type=int)
    p = sub.add_parser("rho", parents=[common], help="von Neumann rho-invariant")
    element(p)
    p.add_argument("--limit", type=int, default=12, metavar="K")
    p.add_argument("--window", type=int, default=4, metavar="W")
    p = sub.add_parser("d0", parents=[common], help="Morita's homomorphism d0 = 3 phi")
    p.add_argument("--word")
    element(sub.add_parser("classify", parents=[common], help="genus-1 trace class"))
    p = sub.add_parser("verify", parents=[common], help="seeded property suite")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-length", type=int, default=12)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        check_calibration(args.j_sign)
        result = COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SigCocycleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    reports, code = result if isinstance(result, tuple) else (result, 0)
    for r in reports:
        if args.json:
            print(r.to_json(args.decimal), file=stdout)
        else:
            print(r.to_text(args.decimal), file=stdout)
            if len(reports) > 1:
                print(file=stdout)
    return code


def main() -> None:
    sys.exit(run())
