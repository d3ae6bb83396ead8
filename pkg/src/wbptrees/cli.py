"""
Command line client for the counting service.

The CLI is a thin HTTP client: every subcommand builds a request and sends
it through the FastAPI app.  By default the app is driven in-process (no
server needed, still a single process); ``--url`` points the same requests
at a running service instead.

Exit codes: 0 success, 1 internal consistency failure or verification
mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

USAGE_EXIT = 2
FAILURE_EXIT = 1


def _send(method: str, path: str, url, *, body=None, params=None):
    """One request, either against a remote service or the in-process app."""
    if url:
        with httpx.Client(base_url=url, timeout=600.0) as client:
            resp = client.request(method, path, json=body, params=params)
        return resp.status_code, resp.json()

    async def call():
        from .service import app
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://wbptrees") as client:
            resp = await client.request(method, path, json=body, params=params)
            return resp.status_code, resp.json()

    return asyncio.run(call())


def _bail(status: int, payload) -> int:
    detail = payload.get("detail", payload) if isinstance(payload, dict) else payload
    print(f"error: {detail}", file=sys.stderr)
    return FAILURE_EXIT if status >= 500 else USAGE_EXIT


def _count_text(payload: dict) -> str:
    lines = [f"{'passport':<13} {payload['passport']}"]
    for d, g in payload["G"].items():
        lines.append(f"{'G(' + d + ')':<13} {g}")
    lines.append(f"{'total':<13} {payload['total']}")
    for d, n in payload["by_symmetry"].items():
        lines.append(f"{'symmetry ' + d:<13} {n}")
    if "closed_form_check" in payload:
        lines.append(f"{'closed form':<13} "
                     f"{'agrees' if payload['closed_form_check'] else 'MISMATCH'}")
    return "\n".join(lines)


def _cmd_count(args) -> int:
    if args.pq:
        try:
            p, q = (int(x) for x in args.pq.split(","))
        except ValueError:
            print("error: --pq expects P,Q", file=sys.stderr)
            return USAGE_EXIT
        body = {"p": p, "q": q}
    else:
        body = {"passport": args.passport}
    status, payload = _send("POST", "/count", args.url, body=body)
    if status != 200:
        return _bail(status, payload)
    if args.format == "text":
        print(_count_text(payload))
    else:
        print(json.dumps(payload, indent=2))
    if payload.get("closed_form_check") is False:
        return FAILURE_EXIT
    return 0


def _census_text(payload: dict) -> str:
    lines = [f"alpha = {payload['alpha']}",
             f"{'p':>4} {'q':>4} {'admissible':>10} {'count':>8}  reason"]
    for row in payload["rows"]:
        count_s = str(row.get("count", "-"))
        lines.append(f"{row['p']:>4} {row['q']:>4} "
                     f"{str(row['admissible']).lower():>10} {count_s:>8}  "
                     f"{row.get('reason', '')}")
    lines.append(f"saddle_total = {payload['saddle_total']}")
    lines.append(f"note: {payload['football_note']}")
    return "\n".join(lines)


def _cmd_census(args) -> int:
    status, payload = _send("GET", "/census", args.url,
                            params={"alpha": args.alpha})
    if status != 200:
        return _bail(status, payload)
    print(_census_text(payload) if args.format == "text"
          else json.dumps(payload, indent=2))
    return 0


def _cmd_enumerate(args) -> int:
    body = {"passport": args.passport, "format": args.format,
            "max_weight": args.max_weight}
    status, payload = _send("POST", "/enumerate", args.url, body=body)
    if status != 200:
        return _bail(status, payload)
    if args.format == "dot":
        print(payload["dot"])
    else:
        print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args) -> int:
    status, payload = _send("POST", "/verify", args.url,
                            body={"max_weight": args.max_weight})
    if status != 200:
        return _bail(status, payload)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"passports checked: {payload['passports_checked']}")
        print(f"(p, q) pairs checked: {payload['pq_checked']}")
        for failure in payload["failures"]:
            print(f"FAIL {failure}")
        print("ok" if payload["ok"] else "verification failed")
    return 0 if payload["ok"] else FAILURE_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wbptrees",
        description="Exact counts of weighted bi-colored plane trees and "
                    "the HCMU moduli census.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--format", choices=formats, default=formats[0],
                       help="output format")
        p.add_argument("--url", default=None,
                       help="base URL of a running service "
                            "(default: run in-process)")

    p_count = sub.add_parser("count", help="count trees with a passport")
    group = p_count.add_mutually_exclusive_group(required=True)
    group.add_argument("--passport", help='power notation, e.g. "2^2 4^3 | 8^2"')
    group.add_argument("--pq", metavar="P,Q",
                       help="use the passport (q^p | p^q) and cross-check "
                            "the closed form")
    common(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_census = sub.add_parser("census",
                              help="per-(p,q) component census for one angle")
    p_census.add_argument("--alpha", type=int, required=True)
    common(p_census)
    p_census.set_defaults(func=_cmd_census)

    p_enum = sub.add_parser("enumerate", help="list all trees with a passport")
    p_enum.add_argument("--passport", required=True)
    p_enum.add_argument("--max-weight", type=int, default=16,
                        help="bound on the total side weight (default 16)")
    common(p_enum, formats=("json", "dot"))
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify",
                              help="run the formula-vs-oracle sweep")
    p_verify.add_argument("--max-weight", type=int, default=8,
                          help="sweep bound on the total side weight "
                               "(default 8)")
    common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def cli_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main():  # console script entry point
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
