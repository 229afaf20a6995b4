"""Command-line client for the fat points service.

By default every command talks to an in-process instance of the service
(no network involved); ``--server URL`` targets a running instance
instead.  JSON output is canonical: sorted keys, no floats.
"""

from __future__ import annotations

import asyncio
import json
import re
import sys
from functools import lru_cache

import click
import httpx


def _canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


@lru_cache(maxsize=1)
def _app():
    from .service import create_app
    return create_app()


def _request(ctx, method: str, path: str, body=None, params=None):
    server = ctx.obj.get("server")
    if server:
        resp = httpx.request(method, server.rstrip("/") + path,
                             json=body, params=params, timeout=600.0)
    else:
        async def go():
            transport = httpx.ASGITransport(app=_app())
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://fatpoints") as client:
                return await client.request(method, path, json=body, params=params)
        resp = asyncio.run(go())
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    return resp.json()


def parse_mults(text: str, r: int | None = None) -> list[int]:
    """Accept comma lists like 1,2,2 and uniform shorthand like 2x8."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*x\s*(\d+)", text)
    if m:
        mults = [int(m.group(1))] * int(m.group(2))
    else:
        try:
            mults = [int(v) for v in text.split(",")]
        except ValueError:
            raise click.UsageError(f"cannot parse multiplicities {text!r}")
    if r is not None and len(mults) != r:
        raise click.UsageError(f"expected {r} multiplicities, got {len(mults)}")
    return mults


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise click.UsageError(f"cannot parse integer list {text!r}")


def _type_spec(r, mode, index, notation, classes):
    given = sum(x is not None for x in (index, notation, classes))
    if given != 1:
        raise click.UsageError("give exactly one of --type, --notation, --classes")
    spec = {"r": r, "mode": mode}
    if index is not None:
        spec["index"] = index
    if notation is not None:
        spec["notation"] = notation
    if classes is not None:
        spec["classes"] = [_int_list(part) for part in classes.split(";")]
    return spec


def _load_points(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Use a running service instead of the in-process engine.")
@click.pass_context
def main(ctx, server):
    """Configuration types of plane point sets and fat point Hilbert functions."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


# --- types -------------------------------------------------------------------

@main.group()
def types():
    """List, enumerate, and canonicalise configuration types."""


@types.command("list")
@click.option("-r", "r", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def types_list(ctx, r, as_json):
    data = _request(ctx, "GET", f"/types/{r}")
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    for t in data["types"]:
        click.echo(f"{t['index']}\t{t['notation']}")


@types.command("enumerate")
@click.option("-r", "r", type=int, required=True)
@click.option("--verify-count", is_flag=True,
              help="Print '<n> OK' after checking the expected count.")
@click.option("--line-classes-only", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def types_enumerate(ctx, r, verify_count, line_classes_only, as_json):
    params = {"line_classes_only": line_classes_only} if line_classes_only else None
    data = _request(ctx, "GET", f"/types/{r}", params=params)
    if verify_count:
        expected = {1: 1, 2: 1, 3: 2, 4: 3, 5: 5, 6: 11, 7: 29, 8: 146}
        if line_classes_only:
            expected = {8: 69}
        want = expected.get(r)
        if want is not None and data["count"] != want:
            click.echo(f"{data['count']} MISMATCH (expected {want})", err=True)
            sys.exit(1)
        click.echo(f"{data['count']} OK")
        return
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    for t in data["types"]:
        click.echo(f"{t['index'] or '-'}\t{t['notation']}")


@types.command("canon")
@click.option("-r", "r", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--type", "index", type=int, default=None)
@click.option("--notation", default=None)
@click.option("--classes", default=None,
              help="Semicolon-separated class vectors, e.g. '1,1,1,1,0;1,1,0,0,1'.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def types_canon(ctx, r, mode, index, notation, classes, as_json):
    body = {"type": _type_spec(r, mode, index, notation, classes)}
    data = _request(ctx, "POST", "/types/canon", body=body)
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    click.echo(f"canonical_key={data['canonical_key']}")
    if data.get("matched_index"):
        click.echo(f"matched index {data['matched_index']}: {data['notation']}")


# --- hilbert / betti ----------------------------------------------------------

def _hilbert_call(ctx, r, mode, index, notation, classes, mults, betti):
    body = {"type": _type_spec(r, mode, index, notation, classes),
            "mults": parse_mults(mults, r), "betti": betti}
    return _request(ctx, "POST", "/hilbert", body=body)


def _print_hilbert(data, as_json, as_csv, betti):
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    if as_csv:
        click.echo("t,h")
        for t, h in enumerate(data["values"]):
            click.echo(f"{t},{h}")
        return
    click.echo("values " + ", ".join(map(str, data["values"])))
    click.echo("delta  " + ", ".join(map(str, data["delta"])))
    click.echo(f"degree {data['degree']}  saturation {data['saturation']}")
    if betti:
        f0 = ", ".join(f"{d}^{c}" for d, c in sorted(
            (int(k), v) for k, v in data["betti_f0"].items()))
        f1 = ", ".join(f"{d}^{c}" for d, c in sorted(
            (int(k), v) for k, v in data["betti_f1"].items()))
        click.echo(f"F0 {f0}")
        click.echo(f"F1 {f1}")


@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--type", "index", type=int, default=None)
@click.option("--notation", default=None)
@click.option("--classes", default=None)
@click.option("-m", "--mults", required=True)
@click.option("--betti", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--csv", "as_csv", is_flag=True)
@click.pass_context
def hilbert(ctx, r, mode, index, notation, classes, mults, betti, as_json, as_csv):
    """Hilbert function of a fat point scheme on a given type."""
    data = _hilbert_call(ctx, r, mode, index, notation, classes, mults, betti)
    _print_hilbert(data, as_json, as_csv, betti)


@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--type", "index", type=int, default=None)
@click.option("--notation", default=None)
@click.option("--classes", default=None)
@click.option("-m", "--mults", required=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def betti(ctx, r, mode, index, notation, classes, mults, as_json):
    """Graded Betti numbers (points on a conic, or r <= 6)."""
    data = _hilbert_call(ctx, r, mode, index, notation, classes, mults, True)
    _print_hilbert(data, as_json, False, True)


# --- zariski -------------------------------------------------------------------

@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--type", "index", type=int, default=None)
@click.option("--notation", default=None)
@click.option("--classes", default=None)
@click.option("--class", "class_vector", required=True,
              help="The class to decompose, as d,m1,...,mr.")
@click.pass_context
def zariski(ctx, r, mode, index, notation, classes, class_vector):
    """Effectivity and Zariski decomposition of a class (JSON output)."""
    body = {"type": _type_spec(r, mode, index, notation, classes),
            "class_vector": _int_list(class_vector)}
    data = _request(ctx, "POST", "/zariski", body=body)
    click.echo(_canonical_json(data), nl=False)


# --- conic ---------------------------------------------------------------------

@main.command()
@click.option("--case", type=click.Choice(["I", "II", "III", "IV"]), required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--a", "a", type=int, default=0)
@click.option("--b", "b", type=int, default=0)
@click.option("--eps", type=int, default=0)
@click.option("-m", "--mult", type=int, default=1)
@click.option("--compare-closed-form", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def conic(ctx, case, r, a, b, eps, mult, compare_closed_form, as_json):
    """Points-on-a-conic cases: negative classes and Hilbert functions."""
    body = {"case": case, "r": r, "a": a, "b": b, "eps": eps, "m": mult,
            "compare_closed_form": compare_closed_form}
    data = _request(ctx, "POST", "/conic", body=body)
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    click.echo("classes " + "; ".join(",".join(map(str, c)) for c in data["classes"]))
    click.echo("values  " + ", ".join(map(str, data["values"])))
    click.echo("delta   " + ", ".join(map(str, data["delta"])))
    if compare_closed_form:
        click.echo("closed  " + ", ".join(map(str, data["closed_form"])))
        click.echo("agrees  " + ("yes" if data["agrees"] else "NO"))
        if not data["agrees"]:
            sys.exit(1)


# --- identify / oracle ----------------------------------------------------------

@main.command()
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def identify(ctx, points_file, as_json):
    """Detect the configuration type of explicit coordinates."""
    data = _request(ctx, "POST", "/identify", body=_load_points(points_file))
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    click.echo(f"type ({data['r']}, {data['index']}): {data['notation']}")
    click.echo("letters -> points " + ",".join(map(str, data["permutation"])))


@main.command()
@click.option("--points", "points_file", required=True, type=click.Path(exists=True))
@click.option("-m", "--mults", required=True)
@click.option("-d", "--degree", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def oracle(ctx, points_file, mults, degree, as_json):
    """Brute-force curve counting on explicit coordinates."""
    pts = _load_points(points_file)
    body = {"points": pts, "mults": parse_mults(mults, len(pts["points"])),
            "degree": degree}
    data = _request(ctx, "POST", "/oracle", body=body)
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    if degree is not None:
        click.echo(f"dim of degree-{degree} system: {data['dimension']}")
    else:
        click.echo("values " + ", ".join(map(str, data["values"])))


# --- represent / extremal / uniform ---------------------------------------------

@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("--type", "index", type=int, required=True)
@click.option("--show-torsion", is_flag=True)
@click.pass_context
def represent(ctx, r, index, show_torsion):
    """Representability verdict (JSON), optionally with the torsion group."""
    params = {"show_torsion": show_torsion} if show_torsion else None
    data = _request(ctx, "GET", f"/represent/{r}/{index}", params=params)
    click.echo(_canonical_json(data), nl=False)


@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("--hz", required=True, help="Target Hilbert function, e.g. 1,3,5,7.")
@click.option("-m", "--mult", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def extremal(ctx, r, hz, mult, mode, as_json):
    """Extremal uniform-multiplicity Hilbert functions over matching types."""
    body = {"r": r, "hz": _int_list(hz), "m": mult, "mode": mode}
    data = _request(ctx, "POST", "/extremal", body=body)
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    click.echo("matching types " + ",".join(map(str, data["matching_types"])))
    if data["h_max"]:
        click.echo("h_max " + ",".join(map(str, data["h_max"]))
                   + " attained by " + ",".join(map(str, data["max_types"])))
    else:
        click.echo("h_max: no pointwise extremum attained")
    if data["h_min"]:
        click.echo("h_min " + ",".join(map(str, data["h_min"]))
                   + " attained by " + ",".join(map(str, data["min_types"])))
    else:
        click.echo("h_min: no pointwise extremum attained")


@main.command()
@click.option("-r", "r", type=int, required=True)
@click.option("-M", "--max-mult", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def uniform(ctx, r, max_mult, as_json):
    """Partition types by uniform-multiplicity Hilbert functions."""
    body = {"r": r, "max_mult": max_mult}
    data = _request(ctx, "POST", "/uniform", body=body)
    if as_json:
        click.echo(_canonical_json(data), nl=False)
        return
    for g in data["groups"]:
        click.echo(",".join(map(str, g)))
    click.echo(f"separating bound {data['separating_bound']}")


# --- tables / catalog ------------------------------------------------------------

@main.group()
def tables():
    """Built-in table regeneration."""


@tables.command("reproduce")
@click.option("--table", "n", type=int, required=True)
@click.pass_context
def tables_reproduce(ctx, n):
    """Recompute table N and compare with the bundled golden file."""
    data = _request(ctx, "GET", f"/tables/{n}")
    click.echo(data["text"], nl=False)
    if not data["matches_golden"]:
        click.echo("MISMATCH with bundled golden file", err=True)
        sys.exit(1)


@main.group()
def catalog():
    """Candidate negative class families."""


@catalog.command("dump")
@click.option("-r", "r", type=int, required=True)
@click.option("--mode", type=click.Choice(["eight_points", "conic"]),
              default="eight_points")
@click.option("--bound", type=int, default=None,
              help="Only classes of self-intersection <= bound.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def catalog_dump(ctx, r, mode, bound, as_json):
    params = {"mode": mode}
    if bound is not None:
        params["bound"] = bound
    data = _request(ctx, "GET", f"/catalog/{r}", params=params)
    if as_json:
        click.echo(_canonical_json(data["classes"]), nl=False)
        return
    for c in data["classes"]:
        click.echo(",".join(map(str, c)))


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn
    uvicorn.run(_app(), host=host, port=port)


if __name__ == "__main__":
    main()
