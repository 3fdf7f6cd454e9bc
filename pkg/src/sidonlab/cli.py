"""Command-line entry point: ``sidonlab <subcommand>``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._intmath import prime_power
from .certs import CertificateError, verify_certificate
from .extremal import DEFAULT_CAP, HSolver, bertrand_lower, bounds_csv, bounds_row, h_exact
from .sidon import check_identities, is_sidon, is_sidon_mod
from .singer import MAX_Q, build_singer_set, verify_perfect_difference_set
from .transfer import ThresholdError, full_transfer, singer_threshold

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime_power_arg(s: str) -> int:
    try:
        q = int(s)
        prime_power(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not a prime power") from None
    if q > MAX_Q:
        raise argparse.ArgumentTypeError(f"q must be at most {MAX_Q}")
    return q


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{s!r} must be positive")
    return v


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not a comma-separated integer list") from None


def cmd_singer(args, out) -> int:
    S = build_singer_set(args.q)
    rep = verify_perfect_difference_set(S.residues, S.modulus)
    mod_ok = is_sidon_mod(S.modulus, S.residues).verified
    if args.json:
        print(S.to_json(), file=out)
    else:
        print(f"q = {S.q} (p = {S.p}, k = {S.k}), modulus = {S.modulus}, size = {len(S.residues)}", file=out)
        print(",".join(map(str, S.residues)), file=out)
        print(f"perfect difference set: {'pass' if rep.ok else 'FAIL'}", file=out)
        print(f"Sidon mod {S.modulus}: {'pass' if mod_ok else 'FAIL'}", file=out)
    return OK if rep.ok and mod_ok and len(S.residues) == S.q + 1 else FAIL


def cmd_verify(args, out) -> int:
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    try:
        rec = json.loads(path.read_text(encoding="utf-8"))
        summary = verify_certificate(rec)
    except (json.JSONDecodeError, CertificateError) as e:
        print(f"INVALID: {e}", file=out)
        return FAIL
    print(f"VALID: {summary}", file=out)
    return OK


def cmd_hmax(args, out) -> int:
    if args.n > args.cap:
        raise UsageError(f"N = {args.n} exceeds cap {args.cap}")
    res = h_exact(args.n, cap=args.cap, solver=HSolver(args.workers))
    print(f"h({res.N}) = {res.h}, witness = {','.join(map(str, res.witness))}", file=out)
    return OK


def cmd_bounds(args, out) -> int:
    lo, hi = args.from_, args.to
    if not 5 <= lo <= hi:
        raise UsageError("need 5 <= --from <= --to")
    cap = max(DEFAULT_CAP, hi)
    solver = HSolver()
    rows = [bounds_row(N, cap=cap, solver=solver) for N in range(lo, hi + 1)]
    text = bounds_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {len(rows)} rows to {args.csv}", file=out)
    else:
        out.write(text)
    bad = [r.N for r in rows if not r.ok]
    if bad:
        print(f"bound violations at N = {','.join(map(str, bad))}", file=sys.stderr)
        return FAIL
    return OK


def cmd_transfer(args, out) -> int:
    S = build_singer_set(args.q)
    N = args.n if args.n is not None else singer_threshold(args.q)
    try:
        res = full_transfer(S.residues, S.modulus, N)
    except ThresholdError as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    print(res.to_json(), file=out)
    return OK if res.full else FAIL


def cmd_lower(args, out) -> int:
    if args.n < 5:
        raise UsageError("--n must be >= 5")
    res = bertrand_lower(args.n)
    print(f"N = {res.N}", file=out)
    if res.p is not None:
        print(f"Bertrand prime p = {res.p}, Singer threshold = {res.threshold}", file=out)
    print(f"witness = {','.join(map(str, res.witness))}", file=out)
    print(f"|witness| = {len(res.witness)} > floor((floor(sqrt(N))+1)/2) = {res.bound}: "
          f"{'pass' if res.ok else 'FAIL'}", file=out)
    return OK if res.ok else FAIL


def cmd_identities(args, out) -> int:
    A = args.set
    cert = is_sidon(A)
    if not cert:
        print(f"not a Sidon set: {cert.reason}", file=out)
        return FAIL
    rep = check_identities(A)
    for name, val in rep.checks.items():
        status = "skip" if val is None else ("pass" if val else "FAIL")
        print(f"{name}: {status}", file=out)
    return OK if rep.ok else FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sidonlab", description="Singer sets, Sidon transfers and h(N).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("singer", help="build and verify a Singer difference set")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_singer)

    p = sub.add_parser("verify", help="re-check a JSON certificate")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hmax", help="exact h(N) with its lexicographically smallest witness")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_hmax)

    p = sub.add_parser("bounds", help="h(N) against every finite bound, as CSV")
    p.add_argument("--from", dest="from_", type=_positive, required=True)
    p.add_argument("--to", type=_positive, required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("transfer", help="Singer set moved into an interval")
    p.add_argument("--q", type=_prime_power_arg, required=True)
    p.add_argument("--n", type=_positive)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("lower", help="Singer-via-Bertrand lower-bound witness")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("identities", help="exact identities of a Sidon set")
    p.add_argument("--set", type=_int_list, required=True)
    p.set_defaults(func=cmd_identities)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else USAGE
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"sidonlab {args.command}: error: {e}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
