"""Command-line front end.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a
mathematical verification failed (positivity or localization-condition
violation), 2 usage error, 3 resource cap exceeded. Output bytes are
deterministic for a given job, independent of worker count and cache
state.
"""

from __future__ import annotations

import csv
import io
import json
import re
import sys
import warnings
from dataclasses import dataclass, field

import click

from .cache import BilleyDiskCache
from .gkm import (
    LocalizedClass,
    NotInSpan,
    PositivityViolation,
    billey_restriction,
    expand_in_schubert_basis,
    forget_to_ordinary,
    gkm_verify,
    schubert_class,
    structure_constants,
    structure_table,
)
from .peterson import (
    all_subsets,
    cross_validate,
    flag_consistency_report,
    peterson_structure_constants,
    peterson_table,
    pullback_expansion,
    subset_text,
)
from .poly import Polynomial, is_graham_positive
from .rootsys import (
    DEFAULT_MAX_WEYL,
    CartanError,
    ResourceCapError,
    bruhat_leq,
    build_root_system,
    element_from_one_line,
    element_from_word,
    is_type_a,
    reduced_words,
    root_system_from_label,
    weyl_enumerate,
    word_text,
)

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class JobConfig:
    command: str
    root_label: str | None = None
    cartan_path: str | None = None
    out_format: str = "text"
    cache_dir: str | None = None
    jobs: int = 1
    max_weyl: int = DEFAULT_MAX_WEYL
    params: dict = field(default_factory=dict)


def _resolve_root_system(config):
    if config.root_label and config.cartan_path:
        raise click.UsageError("give either a type label or --cartan, not both")
    try:
        if config.cartan_path:
            with open(config.cartan_path, encoding="utf-8") as handle:
                payload = json.load(handle)
            if not isinstance(payload, dict) or "cartan" not in payload:
                raise click.UsageError(
                    f'{config.cartan_path} must be JSON of the form '
                    '{"cartan": [[2,-1],[-1,2]]}'
                )
            return build_root_system(payload["cartan"])
        if config.root_label:
            return root_system_from_label(config.root_label)
    except CartanError as exc:
        raise click.UsageError(str(exc)) from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read Cartan file: {exc}") from exc
    raise click.UsageError("specify a root system (label, --type or --cartan)")


def parse_element(rs, spec):
    """Weyl element from one-line notation (type A) or a reduced word."""
    spec = spec.strip()
    if spec in ("e", "id", "identity", ""):
        return rs.identity()
    tokens = [t for t in re.split(r"[\s,*]+", spec) if t]
    if len(tokens) == 1 and tokens[0].isdigit():
        token = tokens[0]
        if len(token) == 1:
            return _word_element(rs, [token])
        if is_type_a(rs) and len(token) == rs.rank + 1:
            try:
                return element_from_one_line(rs, [int(ch) for ch in token])
            except ValueError as exc:
                raise click.UsageError(str(exc)) from exc
        raise click.UsageError(
            f"cannot parse element {spec!r}: use one-line notation with "
            f"{rs.rank + 1} digits (type A) or a word like 's1 s2 s1'"
        )
    return _word_element(rs, tokens)


def _word_element(rs, tokens):
    letters = []
    for token in tokens:
        token = token.lower().lstrip("s")
        if not token.isdigit():
            raise click.UsageError(f"bad word letter {token!r}")
        letters.append(int(token))
    if any(not 1 <= i <= rs.rank for i in letters):
        raise click.UsageError(
            f"word letters must lie in 1..{rs.rank}"
        )
    return element_from_word(rs, letters)


def parse_subset(rs, spec):
    spec = spec.strip()
    if spec in ("", "{}"):
        return frozenset()
    try:
        members = frozenset(int(tok) for tok in spec.split(",") if tok.strip())
    except ValueError as exc:
        raise click.UsageError(f"bad subset {spec!r}: {exc}") from exc
    if not members <= frozenset(range(1, rs.rank + 1)):
        raise click.UsageError(
            f"subset {spec!r} is not within 1..{rs.rank}"
        )
    return members


def _emit_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buffer.getvalue())


def _emit_json(payload):
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit_rows(config, header, rows, json_payload):
    if config.out_format == "csv":
        _emit_csv(header, rows)
    elif config.out_format == "json":
        _emit_json(json_payload)
    else:
        for row in rows:
            sys.stdout.write(" ".join(str(cell) for cell in row) + "\n")


def localized_class_from_json(rs, payload):
    if "values" not in payload or "degree" not in payload:
        raise click.UsageError(
            'class JSON needs "degree" and "values" fields'
        )
    if payload.get("type") and rs.type_label and payload["type"] != rs.type_label:
        raise click.UsageError(
            f'class JSON is for {payload["type"]}, not {rs.type_label}'
        )
    if "cartan" in payload:
        declared = tuple(tuple(int(a) for a in row) for row in payload["cartan"])
        if declared != rs.cartan:
            raise click.UsageError(
                "class JSON carries a different Cartan matrix"
            )
    values = {}
    for word, data in payload["values"].items():
        elt = parse_element(rs, word)
        values[elt] = Polynomial.from_json(rs.rank, data)
    try:
        return LocalizedClass(rs, values, int(payload["degree"]))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


# -- command bodies ------------------------------------------------------


def _cmd_restrict(config, rs):
    v = parse_element(rs, config.params["class_spec"])
    w = parse_element(rs, config.params["at_spec"])
    poly = billey_restriction(rs, v, w)
    if config.out_format == "text":
        sys.stdout.write(poly.text() + "\n")
    else:
        _emit_rows(
            config,
            ["v", "w", "restriction"],
            [[word_text(v), word_text(w), poly.text()]],
            {
                "v": word_text(v),
                "w": word_text(w),
                "restriction": poly.to_json(),
                "restriction_text": poly.text(),
            },
        )
    return 0


def _cmd_mult(config, rs):
    u = parse_element(rs, config.params["u_spec"])
    v = parse_element(rs, config.params["v_spec"])
    coeffs = structure_constants(rs, u, v, config.max_weyl)
    ordered = sorted(coeffs, key=lambda w: w.sort_key())
    rows = [
        [word_text(u), word_text(v), word_text(w), coeffs[w].text()]
        for w in ordered
    ]
    payload = {
        "u": word_text(u),
        "v": word_text(v),
        "coefficients": {word_text(w): coeffs[w].to_json() for w in ordered},
    }
    _emit_rows(config, ["u", "v", "w", "coefficient"], rows, payload)
    return 0


def _cmd_expand(config, rs):
    source = config.params["class_file"]
    try:
        if source == "-":
            payload = json.load(sys.stdin)
        else:
            with open(source, encoding="utf-8") as handle:
                payload = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read class JSON: {exc}") from exc
    cls = localized_class_from_json(rs, payload)
    try:
        coeffs = expand_in_schubert_basis(cls, config.max_weyl)
    except NotInSpan as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_VERIFY_FAILED
    ordered = sorted(coeffs, key=lambda w: w.sort_key())
    rows = [[word_text(w), coeffs[w].text()] for w in ordered]
    payload = {
        "coefficients": {word_text(w): coeffs[w].to_json() for w in ordered}
    }
    _emit_rows(config, ["w", "coefficient"], rows, payload)
    return 0


def _cmd_peterson_mult(config, rs):
    members_i = parse_subset(rs, config.params["i_spec"])
    members_j = parse_subset(rs, config.params["j_spec"])
    order = config.params.get("coxeter_order", "increasing")
    expansion = peterson_structure_constants(rs, members_i, members_j, order)
    rows = [
        [
            subset_text(members_i),
            subset_text(members_j),
            subset_text(members_k),
            expansion.coeff(members_k).text(),
        ]
        for members_k in expansion.support()
    ]
    payload = {
        "I": subset_text(members_i),
        "J": subset_text(members_j),
        "coefficients": {
            subset_text(k): expansion.coeff(k).to_json()
            for k in expansion.support()
        },
    }
    _emit_rows(config, ["I", "J", "K", "coefficient"], rows, payload)
    return 0


def _cmd_pullback(config, rs):
    w = parse_element(rs, config.params["w_spec"])
    order = config.params.get("coxeter_order", "increasing")
    expansion = pullback_expansion(rs, w, order)
    rows = [
        [word_text(w), subset_text(members_k), expansion.coeff(members_k).text()]
        for members_k in expansion.support()
    ]
    payload = {
        "w": word_text(w),
        "coefficients": {
            subset_text(k): expansion.coeff(k).to_json()
            for k in expansion.support()
        },
    }
    _emit_rows(config, ["w", "K", "coefficient"], rows, payload)
    return 0


def _cmd_table(config, rs):
    kind = config.params.get("kind", "schubert")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", PositivityViolation)
        if kind == "schubert":
            table = structure_table(rs, config.jobs, config.max_weyl)
            rows = [
                [word_text(u), word_text(v), word_text(w), poly.text()]
                for u, v, w, poly in table.rows()
            ]
            payload = {
                "kind": "schubert",
                "entries": [
                    {
                        "u": word_text(u),
                        "v": word_text(v),
                        "w": word_text(w),
                        "coefficient": poly.to_json(),
                    }
                    for u, v, w, poly in table.rows()
                ],
            }
            _emit_rows(config, ["u", "v", "w", "coefficient"], rows, payload)
        else:
            order = config.params.get("coxeter_order", "increasing")
            prows = peterson_table(rs, config.jobs, order)
            rows = [
                [
                    subset_text(mi),
                    subset_text(mj),
                    subset_text(mk),
                    poly.text(),
                ]
                for mi, mj, mk, poly in prows
            ]
            payload = {
                "kind": "peterson",
                "entries": [
                    {
                        "I": subset_text(mi),
                        "J": subset_text(mj),
                        "K": subset_text(mk),
                        "coefficient": poly.to_json(),
                    }
                    for mi, mj, mk, poly in prows
                ],
            }
            _emit_rows(config, ["I", "J", "K", "coefficient"], rows, payload)
    violations = [w for w in caught if issubclass(w.category, PositivityViolation)]
    for violation in violations:
        click.echo(f"positivity violation: {violation.message}", err=True)
    return EXIT_VERIFY_FAILED if violations else 0


# -- verification sweeps -------------------------------------------------


def _verify_restriction_positivity(rs, max_weyl):
    order = weyl_enumerate(rs, max_weyl)
    failures = []
    checked = 0
    for w in order:
        for v in order:
            poly = billey_restriction(rs, v, w)
            checked += 1
            if not is_graham_positive(poly):
                failures.append(
                    f"restriction of {word_text(v)} at {word_text(w)}"
                )
    return {
        "name": "restriction-positivity",
        "checked": checked,
        "failures": failures,
    }


def _verify_gkm(rs, max_weyl):
    order = weyl_enumerate(rs, max_weyl)
    failures = []
    for v in order:
        if not gkm_verify(schubert_class(rs, v, max_weyl), max_weyl):
            failures.append(f"class of {word_text(v)}")
    return {"name": "gkm-divisibility", "checked": len(order), "failures": failures}


def _verify_billey_words(rs, max_weyl):
    order = weyl_enumerate(rs, max_weyl)
    cap_words = None if len(order) <= 24 else 2
    failures = []
    checked = 0
    for w in order:
        words = reduced_words(w)
        if cap_words:
            words = words[:cap_words]
        for v in order:
            reference = billey_restriction(rs, v, w)
            checked += 1
            for word in words:
                if billey_restriction(rs, v, w, word=word) != reference:
                    failures.append(
                        f"{word_text(v)} at {word_text(w)} via {word}"
                    )
    return {
        "name": "billey-word-independence",
        "checked": checked,
        "failures": failures,
    }


def _verify_structure(rs, jobs, max_weyl):
    table = structure_table(rs, jobs, max_weyl)
    failures = []
    checked = 0
    for u, v, w, poly in table.rows():
        checked += 1
        label = f"({word_text(u)}, {word_text(v)}, {word_text(w)})"
        if not is_graham_positive(poly):
            failures.append(f"{label}: negative coefficient {poly.text()}")
        if not poly.is_homogeneous(u.length + v.length - w.length):
            failures.append(f"{label}: wrong degree {poly.text()}")
        if not (bruhat_leq(u, w) and bruhat_leq(v, w)):
            failures.append(f"{label}: support outside the Bruhat interval")
    try:
        ordinary = forget_to_ordinary(table)
        if any(c < 0 for c in ordinary.values()):
            failures.append("a degree-zero constant is negative")
    except ValueError as exc:
        failures.append(str(exc))
    return {
        "name": "structure-constant-positivity",
        "checked": checked,
        "failures": failures,
    }


def _verify_peterson(rs, max_weyl, order):
    subsets = all_subsets(rs)
    failures = []
    checked = 0
    expansions = {}
    for members_i in subsets:
        for members_j in subsets:
            expansion = peterson_structure_constants(
                rs, members_i, members_j, order
            )
            expansions[(members_i, members_j)] = expansion
            union = members_i | members_j
            label_ij = f"({{{subset_text(members_i)}}}, {{{subset_text(members_j)}}})"
            for members_k in expansion.support():
                poly = expansion.coeff(members_k)
                checked += 1
                label = f"{label_ij} -> {{{subset_text(members_k)}}}"
                if any(c < 0 for c in poly.coeffs):
                    failures.append(f"{label}: negative {poly.text()}")
                expected = len(members_i) + len(members_j) - len(members_k)
                if not poly.is_homogeneous(expected):
                    failures.append(f"{label}: degree is not {expected}")
                if not union <= members_k:
                    failures.append(f"{label}: support misses the union")
                if len(members_k) > len(members_i) + len(members_j):
                    failures.append(f"{label}: index larger than the degrees allow")
    for (members_i, members_j), expansion in expansions.items():
        if expansion.coeffs != expansions[(members_j, members_i)].coeffs:
            failures.append(
                f"asymmetric constants for {{{subset_text(members_i)}}}, "
                f"{{{subset_text(members_j)}}}"
            )
    for w in weyl_enumerate(rs, max_weyl):
        expansion = pullback_expansion(rs, w, order)
        for members_k in expansion.support():
            poly = expansion.coeff(members_k)
            checked += 1
            if not poly.is_monomial() or any(c < 0 for c in poly.coeffs):
                failures.append(
                    f"pullback of {word_text(w)} at "
                    f"{{{subset_text(members_k)}}}: {poly.text()}"
                )
    return {
        "name": "peterson-positivity",
        "checked": checked,
        "failures": failures,
    }


def _verify_closed_form(rs):
    report = cross_validate(rs, bound=rs.rank)
    failures = [
        f"I={{{subset_text(e.members_i)}}} J={{{subset_text(e.members_j)}}} "
        f"K={{{subset_text(e.members_k)}}}: computed {e.computed.text()}, "
        f"formula {e.formula.text()}"
        for e in report.failures
    ]
    return {
        "name": "closed-form-cross-validation",
        "checked": len(report.entries),
        "failures": failures,
    }


def _verify_consistency(rs, max_weyl, order):
    report = flag_consistency_report(rs, order, max_weyl)
    return {
        "name": "flag-variety-consistency",
        "checked": report.checked,
        "failures": list(report.failures),
    }


_HEAVY_SWEEP_LIMIT = 48  # Weyl group size above which 'all' skips the full table
_CONSISTENCY_LIMIT = 130  # covers A4; the sweep squares the subset lattice


def _cmd_verify(config, rs):
    suite = config.params["suite"]
    order = config.params.get("coxeter_order", "increasing")
    checks = []
    group_size = len(weyl_enumerate(rs, config.max_weyl))

    def skipped(name, reason):
        return {"name": name, "checked": 0, "failures": [], "skipped": reason}

    if suite in ("positivity", "all"):
        checks.append(_verify_restriction_positivity(rs, config.max_weyl))
        if group_size <= _HEAVY_SWEEP_LIMIT:
            checks.append(_verify_structure(rs, config.jobs, config.max_weyl))
        else:
            checks.append(
                skipped(
                    "structure-constant-positivity",
                    f"Weyl group has {group_size} elements; run 'table' "
                    "directly for the full sweep",
                )
            )
        checks.append(_verify_peterson(rs, config.max_weyl, order))
    if suite in ("gkm", "all"):
        checks.append(_verify_gkm(rs, config.max_weyl))
    if suite in ("billey", "all"):
        checks.append(_verify_billey_words(rs, config.max_weyl))
    if suite == "closed-form" and not is_type_a(rs):
        raise click.UsageError("the closed-form suite needs a type A system")
    if suite in ("closed-form", "all"):
        if is_type_a(rs):
            checks.append(_verify_closed_form(rs))
        else:
            checks.append(
                skipped(
                    "closed-form-cross-validation",
                    "the closed form applies to type A only",
                )
            )
    if suite in ("consistency", "all"):
        if group_size <= _CONSISTENCY_LIMIT:
            checks.append(_verify_consistency(rs, config.max_weyl, order))
        elif suite == "consistency":
            raise click.UsageError(
                f"the consistency sweep multiplies Schubert classes over all "
                f"of W; {group_size} elements is beyond the supported size"
            )
        else:
            checks.append(
                skipped(
                    "flag-variety-consistency",
                    f"Weyl group has {group_size} elements",
                )
            )

    ok = all(not check["failures"] for check in checks)
    label = rs.type_label or "custom"
    payload = {"root_system": label, "suite": suite, "ok": ok, "checks": checks}
    if config.out_format == "json":
        _emit_json(payload)
    elif config.out_format == "csv":
        rows = [
            [
                check["name"],
                check["checked"],
                len(check["failures"]),
                "skipped" if check.get("skipped") else
                ("pass" if not check["failures"] else "fail"),
            ]
            for check in checks
        ]
        _emit_csv(["check", "checked", "failures", "status"], rows)
    else:
        for check in checks:
            if check.get("skipped"):
                sys.stdout.write(
                    f"skip {check['name']}: {check['skipped']}\n"
                )
            elif check["failures"]:
                sys.stdout.write(
                    f"FAIL {check['name']}: {len(check['failures'])} of "
                    f"{check['checked']} checks failed\n"
                )
            else:
                sys.stdout.write(
                    f"ok   {check['name']}: {check['checked']} checks\n"
                )
        sys.stdout.write(f"{'ok' if ok else 'FAIL'} {label} suite={suite}\n")
    for check in checks:
        for failure in check["failures"]:
            click.echo(f"{check['name']}: {failure}", err=True)
    return 0 if ok else EXIT_VERIFY_FAILED


_COMMANDS = {
    "restrict": _cmd_restrict,
    "mult": _cmd_mult,
    "expand": _cmd_expand,
    "peterson-mult": _cmd_peterson_mult,
    "pullback": _cmd_pullback,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(config):
    """Execute a job: resolve the root system, warm and persist the cache,
    dispatch, and map resource exhaustion to exit code 3."""
    rs = _resolve_root_system(config)
    cache = BilleyDiskCache(config.cache_dir) if config.cache_dir else None
    if cache:
        cache.load(rs)
    try:
        code = _COMMANDS[config.command](config, rs)
    except ResourceCapError as exc:
        click.echo(f"resource cap: {exc}", err=True)
        return EXIT_RESOURCE
    if cache:
        cache.save(rs)
    return code


def _common_options(fn):
    decorators = [
        click.argument("root_system", required=False),
        click.option("--type", "type_label", default=None,
                     help="Root system label such as A3 or B2."),
        click.option("--cartan", "cartan_path", default=None,
                     help='JSON file {"cartan": [[...]]} with a Cartan matrix.'),
        click.option("--out", "out_format",
                     type=click.Choice(["text", "csv", "json"]),
                     default="text", help="Output format."),
        click.option("--cache", "cache_dir", default=None,
                     help="Directory for the restriction disk cache."),
        click.option("--jobs", type=int, default=1,
                     help="Worker pool size for table and verify sweeps."),
        click.option("--max-weyl", type=int, default=DEFAULT_MAX_WEYL,
                     help="Abort if the Weyl group is larger than this."),
    ]
    for decorator in reversed(decorators):
        fn = decorator(fn)
    return fn


def _make_config(command, root_system, type_label, cartan_path, out_format,
                 cache_dir, jobs, max_weyl, **params):
    if root_system and type_label and root_system != type_label:
        raise click.UsageError(
            "positional root system and --type disagree"
        )
    if jobs < 1:
        raise click.UsageError("--jobs must be at least 1")
    return JobConfig(
        command=command,
        root_label=root_system or type_label,
        cartan_path=cartan_path,
        out_format=out_format,
        cache_dir=cache_dir,
        jobs=jobs,
        max_weyl=max_weyl,
        params=params,
    )


def _finish(code):
    if code:
        sys.exit(code)


@click.group()
def main():
    """Exact equivariant Schubert and Peterson Schubert calculus."""


@main.command("restrict")
@_common_options
@click.option("--class", "class_spec", required=True,
              help="Schubert class index (one-line such as 231, or a word).")
@click.option("--at", "at_spec", required=True,
              help="Fixed point at which to restrict.")
def restrict_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
                 jobs, max_weyl, class_spec, at_spec):
    """Restriction of a Schubert class at a fixed point."""
    _finish(run(_make_config(
        "restrict", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, class_spec=class_spec, at_spec=at_spec,
    )))


@main.command("mult")
@_common_options
@click.option("--u", "u_spec", required=True, help="First Schubert class.")
@click.option("--v", "v_spec", required=True, help="Second Schubert class.")
def mult_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
             jobs, max_weyl, u_spec, v_spec):
    """Structure constants of a product of two Schubert classes."""
    _finish(run(_make_config(
        "mult", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, u_spec=u_spec, v_spec=v_spec,
    )))


@main.command("expand")
@_common_options
@click.option("--values", "class_file", required=True,
              help="JSON file with the class (or - for stdin).")
def expand_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
               jobs, max_weyl, class_file):
    """Expand a localized class in the Schubert basis."""
    _finish(run(_make_config(
        "expand", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, class_file=class_file,
    )))


@main.command("peterson-mult")
@_common_options
@click.option("--I", "i_spec", required=True,
              help='First subset of simple roots, e.g. "1,2" ("" for empty).')
@click.option("--J", "j_spec", required=True, help="Second subset.")
@click.option("--coxeter-order", default="increasing",
              type=click.Choice(["increasing", "decreasing"]),
              help="Order in which Coxeter elements multiply their letters.")
def peterson_mult_cmd(root_system, type_label, cartan_path, out_format,
                      cache_dir, jobs, max_weyl, i_spec, j_spec, coxeter_order):
    """Structure constants of a product of Peterson basis classes."""
    _finish(run(_make_config(
        "peterson-mult", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, i_spec=i_spec, j_spec=j_spec,
        coxeter_order=coxeter_order,
    )))


@main.command("pullback")
@_common_options
@click.option("--w", "w_spec", required=True, help="Schubert class to pull back.")
@click.option("--coxeter-order", default="increasing",
              type=click.Choice(["increasing", "decreasing"]))
def pullback_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
                 jobs, max_weyl, w_spec, coxeter_order):
    """Expand the pullback of a Schubert class in the Peterson basis."""
    _finish(run(_make_config(
        "pullback", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, w_spec=w_spec, coxeter_order=coxeter_order,
    )))


@main.command("table")
@_common_options
@click.option("--kind", type=click.Choice(["schubert", "peterson"]),
              default="schubert", help="Which structure-constant table.")
@click.option("--coxeter-order", default="increasing",
              type=click.Choice(["increasing", "decreasing"]))
def table_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
              jobs, max_weyl, kind, coxeter_order):
    """Full structure-constant table."""
    _finish(run(_make_config(
        "table", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, kind=kind, coxeter_order=coxeter_order,
    )))


@main.command("verify")
@_common_options
@click.option("--suite", required=True,
              type=click.Choice(["positivity", "gkm", "billey", "closed-form",
                                 "consistency", "all"]),
              help="Which verification sweep to run.")
@click.option("--coxeter-order", default="increasing",
              type=click.Choice(["increasing", "decreasing"]))
def verify_cmd(root_system, type_label, cartan_path, out_format, cache_dir,
               jobs, max_weyl, suite, coxeter_order):
    """Run a verification sweep; exits 1 if any check fails."""
    _finish(run(_make_config(
        "verify", root_system, type_label, cartan_path, out_format,
        cache_dir, jobs, max_weyl, suite=suite, coxeter_order=coxeter_order,
    )))


if __name__ == "__main__":
    main()
