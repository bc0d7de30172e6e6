"""Command-line frontend.

Every subcommand is a thin client of the HTTP API.  By default the
FastAPI app is mounted in-process (no server, no sockets), so `numproj
table 6` works offline; pass ``--server URL`` to target a running
instance instead.  Results go to stdout (or ``--output``), diagnostics
to stderr.  Exit codes: 0 success, 1 domain or parse errors, 2 resource
guards.
"""
from __future__ import annotations

import argparse
import asyncio
import sys
from typing import Awaitable, Callable

import httpx

from .kravchuk import TABLE_FORMATS

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_RESOURCE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for resource
    # guards here, so usage problems must fold into the domain exit code
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="numproj", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--server",
        default=None,
        metavar="URL",
        help="base URL of a running service (default: in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("coeff", help="print one coefficient C(n, k, m)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)

    p = sub.add_parser("table", help="print the full coefficient table for n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=TABLE_FORMATS, default="text")

    p = sub.add_parser("identities", help="check the summation identities at n")
    p.add_argument("n", type=int)

    p = sub.add_parser("projector", help="print P(n, k) as an operator document")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=TABLE_FORMATS, default="text")

    p = sub.add_parser("project", help="project an operator file onto k particles")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--particles", required=True, type=int, metavar="K")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--output", default=None, metavar="FILE")
    p.add_argument("--format", choices=TABLE_FORMATS, default="text")
    p.add_argument("--threads", type=int, default=None, metavar="N")

    p = sub.add_parser("partition", help="group an operator file into commuting cliques")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--relation", choices=("general", "qubitwise"), default="general")
    p.add_argument("--order", choices=("magnitude", "input", "lex"), default="magnitude")

    p = sub.add_parser("verify", help="run the dense-matrix verification suites")
    p.add_argument("--max-n", type=int, default=4, dest="max_n", metavar="N")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _failure_exit(resp: httpx.Response) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except ValueError:
        detail = resp.text
    if isinstance(detail, list):  # request-validation errors arrive structured
        detail = "; ".join(str(item.get("msg", item)) for item in detail)
    print(f"error: {detail}", file=sys.stderr)
    return EXIT_RESOURCE if resp.status_code == 413 else EXIT_DOMAIN


async def _run_coeff(client: httpx.AsyncClient, args) -> int:
    resp = await client.get(
        "/coefficient", params={"n": args.n, "k": args.k, "m": args.m}
    )
    if resp.status_code != 200:
        return _failure_exit(resp)
    _write_output(f"{resp.json()['value']}\n", None)
    return EXIT_OK


async def _run_table(client: httpx.AsyncClient, args) -> int:
    resp = await client.get(f"/table/{args.n}", params={"fmt": args.format})
    if resp.status_code != 200:
        return _failure_exit(resp)
    _write_output(resp.text, None)
    return EXIT_OK


async def _run_identities(client: httpx.AsyncClient, args) -> int:
    resp = await client.get(f"/identities/{args.n}")
    if resp.status_code != 200:
        return _failure_exit(resp)
    data = resp.json()
    _write_output(data["text"], None)
    if not data["passed"]:
        print(f"error: identity checks failed at n={args.n}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


async def _run_projector(client: httpx.AsyncClient, args) -> int:
    resp = await client.get(
        "/projector", params={"n": args.n, "k": args.k, "fmt": args.format}
    )
    if resp.status_code != 200:
        return _failure_exit(resp)
    _write_output(resp.text, None)
    return EXIT_OK


async def _run_project(client: httpx.AsyncClient, args) -> int:
    payload = {
        "hamiltonian": _read_input(args.input),
        "particles": args.particles,
        "tolerance": args.tol,
        "fmt": args.format,
    }
    if args.threads is not None:
        payload["threads"] = args.threads
    resp = await client.post("/project", json=payload)
    if resp.status_code != 200:
        return _failure_exit(resp)
    _write_output(resp.json()["document"], args.output)
    return EXIT_OK


async def _run_partition(client: httpx.AsyncClient, args) -> int:
    payload = {
        "hamiltonian": _read_input(args.input),
        "relation": args.relation,
        "order": args.order,
    }
    resp = await client.post("/partition", json=payload)
    if resp.status_code != 200:
        return _failure_exit(resp)
    _write_output(resp.json()["rendered"], None)
    return EXIT_OK


async def _run_verify(client: httpx.AsyncClient, args) -> int:
    resp = await client.get("/verify", params={"max_n": args.max_n})
    if resp.status_code != 200:
        return _failure_exit(resp)
    data = resp.json()
    _write_output(data["text"], None)
    if not data["passed"]:
        print("error: verification suites failed", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


_HANDLERS: dict[str, Callable[[httpx.AsyncClient, argparse.Namespace], Awaitable[int]]] = {
    "coeff": _run_coeff,
    "table": _run_table,
    "identities": _run_identities,
    "projector": _run_projector,
    "project": _run_project,
    "partition": _run_partition,
    "verify": _run_verify,
}


async def _dispatch(args: argparse.Namespace) -> int:
    handler = _HANDLERS[args.command]
    if args.server:
        async with httpx.AsyncClient(base_url=args.server, timeout=300.0) as client:
            return await handler(client, args)
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url="http://numproj.internal", timeout=None
    ) as client:
        return await handler(client, args)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_OK
    try:
        return asyncio.run(_dispatch(args))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
