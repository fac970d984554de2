"""Thin command-line client for the computation service.

Commands build the same request models the HTTP endpoints accept and, by
default, run the handlers in process; --url posts the identical body to a
running server instead.  Documents are UTF-8 JSON; with the subject
argument omitted, one document per stdin line is processed (batch mode,
stopping at the first error).  Exit codes: 0 ok, 1 domain error, 2
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.request

from pydantic import ValidationError

from .documents import DocumentError
from .service import handlers, models

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_MALFORMED = 2

_HANDLERS = {
    "product": handlers.product,
    "conj": handlers.conjugate,
    "split": handlers.split,
    "boost": handlers.boost,
    "rotor-exp": handlers.rotor_exp,
    "factor": handlers.factor,
    "transform": handlers.transform,
    "map": handlers.map_algebra,
    "field-split": handlers.field_split,
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _doc(text: str) -> models.MvDoc:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_MALFORMED, f"invalid JSON: {exc}") from exc
    try:
        return models.MvDoc.model_validate(payload)
    except ValidationError as exc:
        raise CliError(EXIT_MALFORMED, f"invalid document: {exc.errors()[0]['msg']}") from exc


def _floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise CliError(EXIT_MALFORMED, f"{what} must be comma-separated numbers") from exc


def _build_request(args: argparse.Namespace, subject: str | None):
    tol = args.tol
    observer = _doc(args.observer) if getattr(args, "observer", None) else None
    try:
        if args.command == "product":
            rhs = args.rhs if args.rhs is not None else getattr(args, "rhs_flag", None)
            if rhs is None:
                raise CliError(EXIT_MALFORMED, "product needs a right-hand document (--rhs)")
            return models.ProductRequest(lhs=_doc(subject), rhs=_doc(rhs))
        if args.command == "conj":
            return models.ConjRequest(
                subject=_doc(subject), kind=args.kind, observer=observer, tol=tol
            )
        if args.command == "split":
            return models.SplitRequest(
                subject=_doc(subject), kind=args.kind, observer=observer, tol=tol
            )
        if args.command == "boost":
            velocity = _floats(args.velocity, "--velocity") if args.velocity else None
            direction = _floats(args.direction, "--direction") if args.direction else None
            return models.BoostRequest(
                velocity=velocity, rapidity=args.rapidity, direction=direction
            )
        if args.command == "rotor-exp":
            return models.RotorExpRequest(generator=_doc(subject), tol=tol)
        if args.command == "factor":
            return models.FactorRequest(rotor=_doc(subject), tol=tol)
        if args.command == "transform":
            return models.TransformRequest(
                subject=_doc(subject),
                rotor=_doc(args.rotor),
                mode=args.mode,
                kind=args.kind,
                tol=tol,
            )
        if args.command == "map":
            return models.MapRequest(
                subject=_doc(subject), direction=args.direction, observer=observer, tol=tol
            )
        if args.command == "field-split":
            return models.FieldSplitRequest(subject=_doc(subject))
    except ValidationError as exc:
        raise CliError(EXIT_MALFORMED, f"invalid request: {exc.errors()[0]['msg']}") from exc
    raise CliError(EXIT_MALFORMED, f"unknown command {args.command!r}")


def _canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _execute_local(command: str, request) -> str:
    try:
        response = _HANDLERS[command](request)
    except DocumentError as exc:
        raise CliError(EXIT_MALFORMED, str(exc)) from exc
    except ValueError as exc:
        raise CliError(EXIT_DOMAIN, str(exc)) from exc
    return _canonical(response.model_dump(exclude_none=True))


def _execute_remote(url: str, command: str, request) -> str:
    body = json.dumps(request.model_dump(exclude_none=True)).encode()
    http_req = urllib.request.Request(
        f"{url.rstrip('/')}/v1/{command}",
        data=body,
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(http_req) as resp:
            return _canonical(json.loads(resp.read().decode()))
    except urllib.error.HTTPError as exc:
        detail = exc.read().decode(errors="replace")
        code = EXIT_MALFORMED if exc.code == 422 else EXIT_DOMAIN
        raise CliError(code, f"HTTP {exc.code}: {detail}") from exc
    except urllib.error.URLError as exc:
        raise CliError(EXIT_DOMAIN, f"cannot reach service: {exc.reason}") from exc


def _run_one(args: argparse.Namespace, subject: str | None) -> str:
    request = _build_request(args, subject)
    if args.url:
        return _execute_remote(args.url, args.command, request)
    return _execute_local(args.command, request)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lorentzga",
        description="Geometric-algebra relativity calculator (JSON in, JSON out).",
    )
    p.add_argument("--tol", type=float, default=1e-10,
                   help="unimodularity gate for rotors (default 1e-10)")
    p.add_argument("--url", help="POST to a running service instead of computing in process")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("product", help="geometric product of two documents")
    sp.add_argument("subject", nargs="?", help="left-hand document (stdin lines if omitted)")
    sp.add_argument("rhs", nargs="?", help="right-hand document")
    sp.add_argument("--rhs", dest="rhs_flag", help="right-hand document (for batch mode)")

    sp = sub.add_parser("conj", help="dagger, bar, or reverse conjugation")
    sp.add_argument("subject", nargs="?")
    sp.add_argument("--kind", required=True, choices=["dagger", "bar", "reverse"])
    sp.add_argument("--observer", help="sta rotor document defining the frame (dagger on sta)")

    sp = sub.add_parser("split", help="hermitian, scalarlike/vectorlike, or space-time split")
    sp.add_argument("subject", nargs="?")
    sp.add_argument("--kind", required=True, choices=["hermitian", "bar", "spacetime"])
    sp.add_argument("--observer", help="sta rotor document defining the frame")

    sp = sub.add_parser("boost", help="boost rotor from a velocity or rapidity")
    sp.add_argument("--velocity", help="vx,vy,vz with |v| < 1")
    sp.add_argument("--rapidity", type=float)
    sp.add_argument("--direction", help="x,y,z boost axis (with --rapidity)")

    sp = sub.add_parser("rotor-exp", help="rotor exp(W/2) from a plane document")
    sp.add_argument("subject", nargs="?")

    sp = sub.add_parser("factor", help="factor a rotor into boost and rotation")
    sp.add_argument("subject", nargs="?")

    sp = sub.add_parser("transform", help="apply a transformation law")
    sp.add_argument("subject", nargs="?")
    sp.add_argument("--rotor", required=True, help="aps rotor document")
    sp.add_argument("--mode", required=True, choices=["passive", "active", "both"])
    sp.add_argument("--kind", required=True, choices=["paravector", "biparavector"])

    sp = sub.add_parser("map", help="map between the two algebras")
    sp.add_argument("subject", nargs="?")
    sp.add_argument("--direction", required=True, choices=["aps-to-sta", "sta-to-aps"])
    sp.add_argument("--observer", help="sta rotor document defining the frame")

    sp = sub.add_parser("field-split", help="electric/magnetic parts of a field document")
    sp.add_argument("subject", nargs="?")

    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED

    needs_subject = args.command != "boost"
    subject = getattr(args, "subject", None)
    try:
        if not needs_subject or subject is not None:
            print(_run_one(args, subject))
            return EXIT_OK
        # Batch mode: one subject document per stdin line.
        produced = False
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            print(_run_one(args, line))
            produced = True
        if not produced:
            print("error: no input documents on stdin", file=sys.stderr)
            return EXIT_MALFORMED
        return EXIT_OK
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
