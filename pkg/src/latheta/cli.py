"""Command line client for the latheta service.

Every subcommand builds a request and sends it to the HTTP service; by
default an in-process instance of the app answers, --server points the
same requests at a running deployment instead.  Exit codes: 0 ok, 2 bad
input, 3 capacity exceeded, 4 reproduction failures.
"""

import json
import sys

import click
import httpx


def _post(server, path, payload):
    """POST to the service, in-process unless --server was given."""
    if server:
        resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    else:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DeprecationWarning)
            from starlette.testclient import TestClient

        from .service.app import app

        with TestClient(app, raise_server_exceptions=False) as client:
            resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            body = resp.json()
        except ValueError:
            body = {}
        err = body.get("error") or {}
        kind = err.get("kind", "input" if resp.status_code in (400, 422) else "")
        message = err.get("message") or body.get("detail") or resp.text
        click.echo(f"error: {message}", err=True)
        sys.exit(3 if kind == "capacity" else 2)
    return resp.json()


def _lattice_payload(label, lattice_file):
    if (label is None) == (lattice_file is None):
        click.echo("error: provide exactly one of --lattice or --lattice-file",
                   err=True)
        sys.exit(2)
    if label is not None:
        return {"label": label}
    try:
        with open(lattice_file) as fh:
            return {"lattice": json.load(fh)}
    except (OSError, ValueError) as e:
        click.echo(f"error: cannot read lattice file: {e}", err=True)
        sys.exit(2)


def _code_payload(label, code_file):
    if (label is None) == (code_file is None):
        click.echo("error: provide exactly one of --code or --code-file",
                   err=True)
        sys.exit(2)
    if label is not None:
        return {"label": label}
    try:
        with open(code_file) as fh:
            return {"code": json.load(fh)}
    except (OSError, ValueError) as e:
        click.echo(f"error: cannot read code file: {e}", err=True)
        sys.exit(2)


def _q_power(mu):
    """'1' -> 'q', '3/4' -> 'q^{3/4}'."""
    return "q" if mu == "1" else f"q^{{{mu}}}"


def _render_series(terms, lead_one=False):
    parts = (["1"] if lead_one else [])
    parts += [f"{t['count']} {_q_power(t['mu'])}" for t in terms]
    return " + ".join(parts) if parts else "0"


lattice_opts = [
    click.option("--lattice", "label", default=None,
                 help="registry label, e.g. a2, d4, zn:4, a4_c3"),
    click.option("--lattice-file", default=None, type=click.Path(),
                 help="JSON file with an inline lattice"),
]


def _add_opts(opts):
    def wrap(f):
        for opt in reversed(opts):
            f = opt(f)
        return f
    return wrap


@click.group()
@click.option("--server", default=None, envvar="LATHETA_SERVER",
              help="base URL of a running service (default: in-process)")
@click.option("--json", "as_json", is_flag=True, help="raw JSON output")
@click.option("--threads", default=1, show_default=True,
              help="accepted for interface compatibility; evaluation is "
                   "single-threaded")
@click.pass_context
def main(ctx, server, as_json, threads):
    """Exact lattice invariants, generalized theta series and theta ratios."""
    ctx.obj = {"server": server, "json": as_json}


@main.command()
@_add_opts(lattice_opts)
@click.option("--bound", required=True, help="squared norm cutoff, e.g. 9 or 27/4")
@click.pass_obj
def theta(obj, label, lattice_file, bound):
    """Theta spectrum: vector counts by squared norm up to a cutoff."""
    payload = _lattice_payload(label, lattice_file)
    payload["bound"] = bound
    out = _post(obj["server"], "/theta", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    click.echo(f"Theta series up to squared norm {out['bound']}:")
    click.echo("  " + _render_series(out["terms"], lead_one=True))


@main.command()
@_add_opts(lattice_opts)
@click.option("-r", default=2, show_default=True, help="subset rank")
@click.option("-m", "m_max", default=1, show_default=True,
              help="number of series terms")
@click.pass_obj
def gts(obj, label, lattice_file, r, m_max):
    """Generalized theta series of rank r (first m terms)."""
    payload = _lattice_payload(label, lattice_file)
    payload.update({"r": r, "m_max": m_max})
    out = _post(obj["server"], "/gts", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    click.echo(f"Theta^({out['r']}) = " + _render_series(out["terms"]))
    for t in out["terms"]:
        note = "guaranteed" if t["guaranteed"] else "ball-limited"
        click.echo(f"  m={t['m']}: count {t['count']} at determinant "
                   f"{t['mu']} (ball {t['ball_sq']}, {note})")


@main.command()
@_add_opts(lattice_opts)
@click.pass_obj
def norms(obj, label, lattice_file):
    """Generalized Euclidean norm hierarchy nu_1..nu_n with witnesses."""
    payload = _lattice_payload(label, lattice_file)
    out = _post(obj["server"], "/norms", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    click.echo("nu = (" + ", ".join(out["values"]) + ")")
    for r, (v, w) in enumerate(zip(out["values"], out["witnesses"]), start=1):
        click.echo(f"  nu_{r} = {v}  witness rows {w}")


@main.command()
@_add_opts(lattice_opts)
@click.pass_obj
def stable(obj, label, lattice_file):
    """Stability verdict (volume 1 and no sublattice below volume 1)."""
    payload = _lattice_payload(label, lattice_file)
    out = _post(obj["server"], "/stable", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    if out["stable"]:
        click.echo("stable")
    else:
        click.echo(f"unstable: volume_sq {out['volume_sq']}, "
                   f"rank {out['failing_r']} witness {out['witness']}")


@main.command()
@_add_opts(lattice_opts)
@click.option("--tau", default=None, type=float, help="single evaluation point")
@click.option("--scan", is_flag=True, help="scan a log-spaced grid instead")
@click.option("--tau-min", default=0.25, show_default=True)
@click.option("--tau-max", default=4.0, show_default=True)
@click.option("--points", default=200, show_default=True)
@click.option("--tol", default=1e-9, show_default=True)
@click.option("--csv", "csv_path", default=None, type=click.Path(),
              help="write scan as CSV (tau,delta); '-' for stdout")
@click.pass_obj
def ratio(obj, label, lattice_file, tau, scan, tau_min, tau_max, points, tol,
          csv_path):
    """Theta ratio Delta(tau) for a volume-1 lattice."""
    payload = _lattice_payload(label, lattice_file)
    payload.update({"tau": tau, "scan": scan or csv_path is not None,
                    "tau_min": tau_min, "tau_max": tau_max,
                    "points": points, "tol": tol})
    out = _post(obj["server"], "/ratio", payload)
    if out.get("scan") is not None and csv_path:
        lines = ["tau,delta"] + [
            f"{p['tau']:.12g},{p['delta']:.12g}" for p in out["scan"]
        ]
        text = "\n".join(lines) + "\n"
        if csv_path == "-":
            click.echo(text, nl=False)
        else:
            with open(csv_path, "w") as fh:
                fh.write(text)
            click.echo(f"wrote {len(out['scan'])} rows to {csv_path}")
        return
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    if out.get("scan") is not None:
        deltas = [p["delta"] for p in out["scan"]]
        click.echo(f"{len(deltas)} grid points on [{tau_min}, {tau_max}]: "
                   f"min delta {min(deltas):.9f}, max delta {max(deltas):.9f}")
    else:
        click.echo(f"Delta({out['tau']}) = {out['delta']:.9f}")


@main.command()
@_add_opts(lattice_opts)
@click.option("--tau0", default=1.0, show_default=True, help="symmetry point")
@click.option("--tol", default=1e-9, show_default=True)
@click.pass_obj
def symmetry(obj, label, lattice_file, tau0, tol):
    """Check Delta(tau0*t) = Delta(tau0/t) over probe values."""
    payload = _lattice_payload(label, lattice_file)
    payload.update({"tau0": tau0, "tol": tol})
    out = _post(obj["server"], "/symmetry", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    verdict = "symmetric" if out["symmetric"] else "asymmetric"
    click.echo(f"{verdict} about tau0={out['tau0']}: "
               f"max deviation {out['max_deviation']:.3e}")


@main.command()
@click.option("--code", "label", default=None, help="registry label, e.g. c1")
@click.option("--code-file", default=None, type=click.Path(),
              help="JSON file with an inline code")
@click.option("-r", default=None, type=int, help="single subcode dimension")
@click.pass_obj
def ghw(obj, label, code_file, r):
    """Generalized Hamming weights of a binary code."""
    payload = _code_payload(label, code_file)
    if r is not None:
        payload["r"] = r
    out = _post(obj["server"], "/ghw", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    if out.get("value") is not None:
        click.echo(f"d_{out['r']} = {out['value']}")
    else:
        click.echo("d = {" + ", ".join(str(d) for d in out["hierarchy"]) + "}")


@main.command()
@click.option("--code", "label", default=None, help="registry label, e.g. c3")
@click.option("--code-file", default=None, type=click.Path(),
              help="JSON file with an inline code")
@click.pass_obj
def constructa(obj, label, code_file):
    """Construction A lattice of a Z_q code (Gram matrix and volume)."""
    payload = _code_payload(label, code_file)
    out = _post(obj["server"], "/constructa", payload)
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
        return
    lat = out["lattice"]
    click.echo(f"dim {lat['dim']}, volume_sq {out['volume_sq']}")
    for row in lat["gram"]:
        click.echo("  [" + ", ".join(row) + "]")


@main.command("paper-repro")
@click.option("--strict-gts-example3", is_flag=True,
              help="also compare the truncation-sensitive rank-2 counts")
@click.pass_obj
def paper_repro(obj, strict_gts_example3):
    """Recompute every bundled reference value and report PASS/FAIL/WARN."""
    out = _post(obj["server"], "/paper-repro",
                {"strict_gts_example3": strict_gts_example3})
    if obj["json"]:
        click.echo(json.dumps(out, indent=2))
    else:
        for c in out["checks"]:
            click.echo(f"[{c['status']}] {c['name']}: {c['detail']}")
        s = out["summary"]
        click.echo(f"{s['pass']} passed, {s['fail']} failed, {s['warn']} warned")
    if not out["ok"]:
        sys.exit(4)


if __name__ == "__main__":
    main()
