"""Command-line front end: direct operations and a JSON scenario runner.

Every computation reachable from the command line goes through one
registry of (module, operation) handlers.  A scenario file names a
handler, hands it a payload, and optionally pins expected report entries
or a golden report file; the runner validates scenario files against a
schema before executing them.  Reports are emitted as canonical JSON
(sorted keys, fixed indentation) so golden comparisons are byte-exact.

Exit codes: 0 success, 2 malformed scenario or unknown operation,
3 operation failure, 4 expectation or golden mismatch.
"""

from __future__ import annotations

import json
import os
import pathlib
import random
from concurrent.futures import ProcessPoolExecutor

import click
import jsonschema

from . import clifford as cliffordmod
from . import groebner, homalg, mf, windows
from . import poly as polymod
from .field import parse_field
from .groebner import ModElt
from .poly import Poly

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_OPERATION = 3
EXIT_GOLDEN = 4

MODULES = ("exactalg", "groebner", "mf", "homalg", "windows", "clifford")

SCENARIO_SCHEMA = {
    "type": "object",
    "required": ["name", "module", "operation", "payload"],
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "description": {"type": "string"},
        "module": {"enum": list(MODULES)},
        "operation": {"type": "string", "minLength": 1},
        "payload": {"type": "object"},
        "expect": {"type": "object"},
        "golden": {"type": "string"},
        "seed": {"type": "integer"},
    },
    "additionalProperties": False,
}


class OperationError(ValueError):
    """Raised by handlers for payloads that name impossible requests."""


class Options:
    """Settings shared by every handler; picklable for worker processes."""

    def __init__(self, seed=0, jobs=1, degree_cap=10, field_name="rational",
                 out="json"):
        self.seed = seed
        self.jobs = jobs
        self.degree_cap = degree_cap
        self.field_name = field_name
        self.out = out

    @property
    def field(self):
        return parse_field(self.field_name)

    def with_seed(self, seed):
        return Options(seed, self.jobs, self.degree_cap, self.field_name,
                       self.out)

    def to_tuple(self):
        return (self.seed, self.jobs, self.degree_cap, self.field_name,
                self.out)

    @staticmethod
    def from_tuple(t):
        return Options(*t)


# ---------------------------------------------------------------------------
# serialization


def canonical_json(data):
    """Deterministic JSON text (sorted keys, two-space indent)."""
    return json.dumps(data, sort_keys=True, indent=2)


def _plain(obj):
    """Coerce a report into pure JSON data, deterministically."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {k if isinstance(k, str) else _key_str(k): _plain(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    return str(obj)


def _key_str(k):
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def _pres_json(pres):
    return {
        "generators": [_plain(dict(g)) for g in pres.gens],
        "relations": [[p.to_str() for p in r.to_column()]
                      for r in pres.relations],
        "ideal": [p.to_str() for p in pres.ideal],
    }


def _cohomology_json(c):
    ev, od = c.parity_split()
    return {
        "generators": [_plain(dict(g)) for g in c.gens],
        "even": len(ev),
        "odd": len(od),
    }


def _map_json(entries):
    return {"%d,%d" % k: p.to_str() for k, p in sorted(entries.items())}


def _table_json(table):
    return {"%d,%d" % k: p.to_str() for k, p in sorted(table.items())}


def _algebra_json(alg, cap):
    return {
        "generators": [{"name": n, "degree": d}
                       for n, d in zip(alg.gen_names, alg.gen_degrees)],
        "relations": [p.to_str() for p in alg.relations],
        "graded_dims": alg.graded_dims(cap),
    }


# ---------------------------------------------------------------------------
# payload decoding


def _ring_from_payload(data, options):
    if not isinstance(data, dict):
        raise OperationError("ring must be an object")
    if "named" in data:
        name = data["named"]
        if name == "so2_local":
            return polymod.so2_local_ring(data.get("n", 2),
                                          data.get("corank", 2),
                                          field=options.field)
        if name == "global":
            return polymod.global_ring(data["n"], data["l"],
                                       rconv=data.get("rconv", "B"),
                                       field=options.field)
        raise OperationError("unknown named ring %r" % name)
    if "vars" in data:
        return polymod.ring_from_json(data)
    raise OperationError("ring needs 'named' or 'vars'")


def _poly_in(ring, spec):
    if isinstance(spec, str):
        return ring.parse(spec)
    if isinstance(spec, list):
        return Poly.from_json(ring, spec)
    raise OperationError("polynomial must be a string or a term list")


def _form_from_payload(data, field):
    if not isinstance(data, dict):
        raise OperationError("form must be an object")
    if "diagonal" in data:
        return cliffordmod.QuadraticForm.diagonal(
            [field.coerce(v) for v in data["diagonal"]], field)
    if "hyperbolic" in data:
        return cliffordmod.QuadraticForm.hyperbolic(data["hyperbolic"], field)
    if "matrix" in data:
        return cliffordmod.QuadraticForm(
            [[field.from_str(str(v)) for v in row] for row in data["matrix"]],
            field)
    raise OperationError("form needs 'diagonal', 'hyperbolic' or 'matrix'")


# ---------------------------------------------------------------------------
# operation handlers


def op_groebner_basis(payload, options):
    ring = _ring_from_payload(payload["ring"], options)
    gens = [_poly_in(ring, g) for g in payload["generators"]]
    gb, _ = groebner.ideal_gb(ring, gens)
    basis = sorted(e.comps[0].to_str() for e in gb)
    return {"generators": [g.to_str() for g in gens],
            "basis": basis, "size": len(basis)}


def op_normal_form(payload, options):
    ring = _ring_from_payload(payload["ring"], options)
    gens = [_poly_in(ring, g) for g in payload["generators"]]
    elt = _poly_in(ring, payload["element"])
    gb, order = groebner.ideal_gb(ring, gens)
    rem = groebner.normal_form(ModElt(ring, 1, {0: elt}), gb, order)
    p = rem.comps.get(0, ring.zero())
    return {"element": elt.to_str(), "remainder": p.to_str(),
            "is_member": p.is_zero()}


def op_subquotient(payload, options):
    ring = _ring_from_payload(payload["ring"], options)

    def cols(key):
        return [[_poly_in(ring, p) for p in col]
                for col in payload.get(key, [])]

    ideal = [_poly_in(ring, p) for p in payload.get("quotient_ideal", [])]
    gd = payload.get("gen_degrees")
    if gd is not None:
        gd = [(tuple(t), r) for (t, r) in gd]
    pres = groebner.subquotient(cols("kernel_columns"), cols("image_columns"),
                                ring, quotient_ideal=ideal, gen_degrees=gd,
                                ambient_rank=payload.get("ambient_rank"))
    return _pres_json(pres)


def op_windows_sets(payload, options):
    n, l = payload["n"], payload["l"]
    s_plus, s_minus, s_res = windows.window_regions(n, l)
    out = {"n": n, "l": l}
    for key, reg in (("s_plus", s_plus), ("s_minus", s_minus),
                     ("s_minus_res", s_res)):
        entry = {"inequalities": reg.inequality_strings(),
                 "bounded": reg.is_bounded()}
        if entry["bounded"]:
            pts = reg.enumerate()
            entry["points"] = [list(w) for w in pts]
            entry["size"] = len(pts)
        out[key] = entry
    return out


def op_windows_reduce(payload, options):
    ws = [tuple(w) for w in payload["weights"]]
    n = payload["n"]
    final, trace = windows.reduce_to_window(ws, n)
    s_plus, _, _ = windows.window_regions(n, max(0, n - 1))
    return {
        "n": n,
        "input": [list(w) for w in sorted(set(ws))],
        "final": [list(w) for w in sorted(final)],
        "in_window": all(s_plus.contains(w) for w in final),
        "trace": _plain(trace),
    }


def op_windows_reduce_random(payload, options):
    ns = payload.get("n_values") or [payload.get("n", 3)]
    trials = payload.get("trials", 100)
    count = payload.get("count", 4)
    rng = random.Random(options.seed)
    results = []
    ok = True
    for n in ns:
        s_plus, _, _ = windows.window_regions(n, max(0, n - 1))
        inside = 0
        for _ in range(trials):
            ws = windows.random_strip_weights(n, rng, count=count)
            final, _ = windows.reduce_to_window(ws, n)
            if all(s_plus.contains(w) for w in final):
                inside += 1
        results.append({"n": n, "trials": trials, "in_window": inside})
        ok = ok and inside == trials
    return {"seed": options.seed, "results": results, "all_in_window": ok}


def op_windows_exceptional(payload, options):
    n, l = payload["n"], payload["l"]
    labels, edges = windows.enumerate_exceptional(n, l)
    out = {
        "n": n,
        "l": l,
        "count": len(labels),
        "labels": [lab.to_json() for lab in labels],
        "edge_count": len(edges),
        "edges": [list(e) for e in edges],
    }
    if payload.get("check_vanishing", True):
        violations = []
        for a, ra in enumerate(labels):
            for b, rb in enumerate(labels):
                if a == b or windows.irrep_leq(ra, rb):
                    continue
                d = windows.invariant_hom_dim(ra, rb, n)
                if d:
                    violations.append([a, b, d])
        out["vanishing_ok"] = not violations
        out["vanishing_violations"] = violations
    return out


def op_mf_validate_model(payload, options):
    n = payload.get("n", 2)
    corank = payload.get("corank", 2)
    variant = payload.get("variant", "so2")
    model = mf.standard_model(n, corank, variant)
    objects = {}
    for name in model.object_names():
        m = model.objects[name]
        rep = mf.validate_mf(m)
        objects[name] = {
            "ok": rep["ok"],
            "errors": rep["errors"],
            "rank": m.rank,
            "generator_weights": sorted(g.torus[0] for g in m.gens),
        }
    out = {"n": n, "corank": corank, "variant": variant,
           "potential": model.w.to_str(), "objects": objects}
    mutations = []
    for spec in payload.get("mutations", []):
        m = model.objects[spec["object"]]
        entries = dict(m.entries)
        t, s = spec["entry"]
        p = m.ring.parse(spec["poly"])
        if p.is_zero():
            entries.pop((t, s), None)
        else:
            entries[(t, s)] = p
        mutant = mf.MatrixFactorization(m.ring, m.w, list(m.gens), entries,
                                        ideal=m.ideal)
        rep = mf.validate_mf(mutant)
        mutations.append({
            "object": spec["object"],
            "entry": [t, s],
            "ok": rep["ok"],
            "error_count": len(rep["errors"]),
            "first_error": rep["errors"][0] if rep["errors"] else None,
        })
    if mutations:
        out["mutations"] = mutations
    return out


def op_mf_koszul_global(payload, options):
    n, l = payload["n"], payload["l"]
    m = mf.global_koszul(n, l, field=options.field)
    rep = mf.validate_mf(m)
    return {"n": n, "l": l, "rank": m.rank,
            "ok": rep["ok"], "errors": rep["errors"]}


def op_mf_knorrer(payload, options):
    n = payload.get("n", 2)
    if n < 2:
        raise OperationError("the rank-four kernel needs n >= 2")
    ring = polymod.so2_local_ring(n, 0, field=options.field)
    k2 = mf.knorrer_factor(ring, 1)
    v2 = mf.validate_mf(k2)
    w2 = mf.weights_at_point(k2, {})
    k4, sig = mf.knorrer_factor_o2(ring, 1, 2)
    v4 = mf.validate_mf(k4)
    w4 = mf.weights_at_point(k4, {})
    sv = sig.verify()
    return {
        "rank2": {"ok": v2["ok"], "errors": v2["errors"], "rank": k2.rank,
                  "weights": list(w2["weights"])},
        "rank4": {"ok": v4["ok"], "errors": v4["errors"], "rank": k4.rank,
                  "weights": list(w4["weights"]),
                  "sigma_ok": sv["ok"], "sigma_square": sig.square},
    }


def op_mf_weights(payload, options):
    n = payload.get("n", 2)
    corank = payload.get("corank", 2)
    model = mf.standard_model(n, corank, payload.get("variant", "so2"))
    m = model.objects[payload.get("object", "family1")]
    points = {}
    for pt in payload["points"]:
        wp = mf.weights_at_point(m, dict(pt["values"]))
        points[pt["name"]] = {
            "weights": list(wp["weights"]),
            "multiplicities": {str(k): list(v)
                               for k, v in sorted(wp["multiplicities"].items())},
        }
    return {"n": n, "corank": corank,
            "object": payload.get("object", "family1"), "points": points}


def op_mf_even_bound(payload, options):
    n = payload["n"]
    ring = polymod.so2_local_ring(n, 1, field=options.field)
    k1, k2 = mf.even_corank1_pair(ring, n)
    bound = n // 2
    v1 = mf.validate_mf(k1)
    v2 = mf.validate_mf(k2)
    w1 = sorted({g.torus[0] for g in k1.gens})
    w2 = sorted({g.torus[0] for g in k2.gens})
    within = all(-bound <= w <= bound for w in w1 + w2)
    return {"n": n, "bound": bound, "valid": v1["ok"] and v2["ok"],
            "family1_weights": w1, "family2_weights": w2,
            "within_bound": within}


def op_homalg_corank2(payload, options):
    rep = homalg.corank2_endomorphism_algebra(cap=options.degree_cap)
    return {
        "ok": rep["ok"],
        "odd_generators": list(rep["odd_generators"]),
        "dual_cohomology": {
            "family1": _cohomology_json(rep["cohomology_family1_dual"]),
            "family2": _cohomology_json(rep["cohomology_family2_dual"]),
        },
        "invariant_modules": {
            "family1": _pres_json(rep["invariant_family1"]),
            "family2": _pres_json(rep["invariant_family2"]),
        },
        "module_checks": {
            "family1": _plain(rep["module_check_family1"]),
            "family2": _plain(rep["module_check_family2"]),
            "unit": _plain(rep["module_check_unit"]),
        },
        "cocycles": {k: _map_json(v) for k, v in rep["cocycles"].items()},
        "transported_closed": rep["transported_closed"],
        "table": _table_json(rep["table"]),
        "table_family2": _table_json(rep["table_family2"]),
        "blocks_agree": rep["blocks_agree"],
        "commutative": rep["commutative"],
        "algebra": _algebra_json(rep["algebra"], options.degree_cap),
        "algebra_check": _plain(rep["algebra_check"]),
    }


def op_homalg_dual_cohomology(payload, options):
    fam = payload.get("family", 1)
    if fam not in (1, 2):
        raise OperationError("family must be 1 or 2")
    rep = homalg.corank2_endomorphism_algebra(cap=options.degree_cap)
    return {
        "family": fam,
        "cohomology": _cohomology_json(rep["cohomology_family%d_dual" % fam]),
        "invariant": _pres_json(rep["invariant_family%d" % fam]),
        "module_check": _plain(rep["module_check_family%d" % fam]),
    }


def op_homalg_invariant_module(payload, options):
    rep = homalg.corank2_endomorphism_algebra(cap=options.degree_cap)
    return {
        "family1": {"presentation": _pres_json(rep["invariant_family1"]),
                    "check": _plain(rep["module_check_family1"])},
        "family2": {"presentation": _pres_json(rep["invariant_family2"]),
                    "check": _plain(rep["module_check_family2"])},
        "unit_check": _plain(rep["module_check_unit"]),
        "ok": (rep["module_check_family1"]["ok"]
               and rep["module_check_family2"]["ok"]
               and rep["module_check_unit"]["ok"]),
    }


def op_homalg_so2_variant(payload, options):
    rep = homalg.so2_variant_endomorphism_algebra(cap=options.degree_cap)
    return {
        "ok": rep["ok"],
        "cohomology": _cohomology_json(rep["cohomology"]),
        "invariant": _pres_json(rep["invariant"]),
        "module_check": _plain(rep["module_check"]),
        "unit_label": rep["unit_label"],
        "unit_is_pure_dual_generator": rep["unit_is_pure_dual_generator"],
        "algebra": _algebra_json(rep["algebra"], options.degree_cap),
        "algebra_check": _plain(rep["algebra_check"]),
    }


def op_clifford_build(payload, options):
    q = _form_from_payload(payload["form"], options.field)
    alg = cliffordmod.clifford_algebra(q)
    out = {"m": q.m, "corank": q.corank(), "dim": alg.dim,
           "even_dim": alg.even_part().dim}
    if payload.get("check", True):
        out["relations_ok"] = cliffordmod.check_clifford_relations(alg)
        out["associative"] = cliffordmod.check_associativity(
            alg, seed=options.seed)
    return out


def op_clifford_center(payload, options):
    forms = payload.get("forms")
    if forms is None:
        forms = [dict(payload["form"], name="form")]
    results = []
    for spec in forms:
        q = _form_from_payload(spec, options.field)
        alg = cliffordmod.clifford_algebra(q)
        even = alg.even_part()
        crep = cliffordmod.center_split(even)
        results.append({
            "name": spec.get("name", "form%d" % len(results)),
            "m": q.m,
            "corank": q.corank(),
            "dim": alg.dim,
            "even_dim": even.dim,
            "even_center": _plain(crep.to_json(even)),
        })
    if "forms" not in payload:
        return results[0]
    return {"results": results}


def op_clifford_strata(payload, options):
    if "random_pencils" in payload:
        spec = payload["random_pencils"]
        m, count = spec["m"], spec["count"]
        rng = random.Random(options.seed)
        counts = []
        ok = True
        for _ in range(count):
            while True:
                A = cliffordmod.random_symmetric_matrix(m, rng)
                B = cliffordmod.random_symmetric_matrix(m, rng)
                try:
                    rep = cliffordmod.stratify_system([A, B])
                except ValueError:
                    continue
                break
            counts.append(rep.corank1_count)
            ok = ok and (rep.corank1_count == m
                         and not rep.identically_singular
                         and not rep.has_corank_at_least(2))
        return {"m": m, "count": count, "seed": options.seed,
                "corank1_counts": counts, "all_count_m": ok}
    mats = [[[options.field.from_str(str(v)) for v in row] for row in mat]
            for mat in payload["matrices"]]
    rep = cliffordmod.stratify_system(
        mats, dim_v=payload.get("dim_v"),
        samples=payload.get("samples", 12), seed=options.seed)
    return _plain(rep.to_json())


OPERATIONS = {
    ("groebner", "basis"): op_groebner_basis,
    ("groebner", "normal_form"): op_normal_form,
    ("groebner", "subquotient"): op_subquotient,
    ("windows", "sets"): op_windows_sets,
    ("windows", "reduce"): op_windows_reduce,
    ("windows", "reduce_random"): op_windows_reduce_random,
    ("windows", "exceptional"): op_windows_exceptional,
    ("mf", "validate_model"): op_mf_validate_model,
    ("mf", "koszul_global"): op_mf_koszul_global,
    ("mf", "knorrer_kernels"): op_mf_knorrer,
    ("mf", "weights_at_point"): op_mf_weights,
    ("mf", "even_case_bound"): op_mf_even_bound,
    ("homalg", "corank2_endalgebra"): op_homalg_corank2,
    ("homalg", "dual_cohomology"): op_homalg_dual_cohomology,
    ("homalg", "invariant_module"): op_homalg_invariant_module,
    ("homalg", "so2_variant"): op_homalg_so2_variant,
    ("clifford", "build"): op_clifford_build,
    ("clifford", "center"): op_clifford_center,
    ("clifford", "strata"): op_clifford_strata,
}


# ---------------------------------------------------------------------------
# scenario execution


def execute_scenario(path, options):
    """Run one scenario file; returns (exit code, result record)."""
    path = pathlib.Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        return EXIT_SCHEMA, {"scenario": str(path), "status": "schema-error",
                             "message": str(exc)}
    try:
        jsonschema.validate(data, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        return EXIT_SCHEMA, {"scenario": data.get("name", str(path)),
                             "status": "schema-error", "message": exc.message}
    handler = OPERATIONS.get((data["module"], data["operation"]))
    if handler is None:
        return EXIT_SCHEMA, {
            "scenario": data["name"], "status": "schema-error",
            "message": "unknown operation %s.%s"
                       % (data["module"], data["operation"])}
    opts = options.with_seed(data["seed"]) if "seed" in data else options
    try:
        report = _plain(handler(data["payload"], opts))
    except (ValueError, KeyError, TypeError) as exc:
        return EXIT_OPERATION, {
            "scenario": data["name"], "status": "operation-error",
            "message": "%s: %s" % (type(exc).__name__, exc)}
    result = {"scenario": data["name"], "status": "pass", "report": report}
    mismatches = []
    for key in sorted(data.get("expect", {})):
        want = _plain(data["expect"][key])
        have = report.get(key)
        if canonical_json(want) != canonical_json(have):
            mismatches.append({"key": key, "expected": want, "actual": have})
    if "golden" in data:
        gpath = path.parent / data["golden"]
        try:
            want_text = gpath.read_text()
        except OSError as exc:
            mismatches.append({"key": "<golden>", "error": str(exc)})
        else:
            if want_text != canonical_json(report) + "\n":
                mismatches.append({"key": "<golden>",
                                   "error": "report differs from %s"
                                            % data["golden"]})
    if mismatches:
        result["status"] = "mismatch"
        result["mismatches"] = mismatches
        return EXIT_GOLDEN, result
    return EXIT_OK, result


def _scenario_worker(args):
    path, opts_tuple = args
    return execute_scenario(path, Options.from_tuple(opts_tuple))


def run_scenarios(paths, options):
    """Run scenario files (in parallel when jobs > 1, order preserved)."""
    jobs = min(options.jobs, len(paths))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_scenario_worker,
                                     [(str(p), options.to_tuple())
                                      for p in paths]))
    else:
        outcomes = [execute_scenario(p, options) for p in paths]
    return outcomes


def suite_dir():
    env = os.environ.get("MFWIN_SUITE_DIR")
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).resolve().parent / "suite"


def suite_entries(module=None):
    """(path, header) pairs for the bundled scenarios, sorted by filename."""
    base = suite_dir()
    entries = []
    for p in sorted(base.glob("*.json")):
        try:
            data = json.loads(p.read_text())
        except (OSError, json.JSONDecodeError):
            data = {}
        header = {"file": p.name,
                  "name": data.get("name", "?"),
                  "module": data.get("module", "?"),
                  "operation": data.get("operation", "?"),
                  "description": data.get("description", "")}
        if module and header["module"] != module:
            continue
        entries.append((p, header))
    return entries


# ---------------------------------------------------------------------------
# output


def _inline(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return str(v)


def _text_lines(data, indent=""):
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, dict) and v:
                lines.append("%s%s:" % (indent, k))
                lines.extend(_text_lines(v, indent + "  "))
            elif (isinstance(v, list)
                  and any(isinstance(x, (dict, list)) for x in v)):
                lines.append("%s%s:" % (indent, k))
                lines.extend(_text_lines(v, indent + "  "))
            else:
                lines.append("%s%s: %s" % (indent, k, _inline(v)))
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)):
                lines.append("%s-" % indent)
                lines.extend(_text_lines(v, indent + "  "))
            else:
                lines.append("%s- %s" % (indent, _inline(v)))
    else:
        lines.append("%s%s" % (indent, _inline(data)))
    return lines


def emit(data, options):
    if options.out == "text":
        click.echo("\n".join(_text_lines(data)))
    else:
        click.echo(canonical_json(data))


def _finish(options, key, payload):
    handler = OPERATIONS[key]
    try:
        report = _plain(handler(payload, options))
    except (ValueError, KeyError, TypeError) as exc:
        click.echo("error: %s" % exc, err=True)
        raise SystemExit(EXIT_OPERATION)
    emit(report, options)


def _load_payload(path):
    try:
        data = json.loads(pathlib.Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        click.echo("error: %s" % exc, err=True)
        raise SystemExit(EXIT_SCHEMA)
    if not isinstance(data, dict):
        click.echo("error: payload must be a JSON object", err=True)
        raise SystemExit(EXIT_SCHEMA)
    return data


def _report_outcomes(outcomes, options):
    for code, result in outcomes:
        click.echo("%s: %s" % (result.get("scenario", "?"),
                               result.get("status", "?")), err=True)
    emit([result for _, result in outcomes], options)
    worst = max((code for code, _ in outcomes), default=EXIT_OK)
    raise SystemExit(worst)


# ---------------------------------------------------------------------------
# command tree


def _validate_field(ctx, param, value):
    try:
        parse_field(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    return value


@click.group()
@click.option("--seed", default=0, show_default=True, type=int,
              help="Seed for randomized operations.")
@click.option("--jobs", default=1, show_default=True, type=int,
              help="Worker processes for scenario batches.")
@click.option("--degree-cap", default=10, show_default=True, type=int,
              help="Degree bound for graded dimension tables.")
@click.option("--field", default="rational", show_default=True,
              callback=_validate_field,
              help="Coefficient field: rational or fp:<prime>.")
@click.option("--out", default="json", show_default=True,
              type=click.Choice(["json", "text"]),
              help="Report format.")
@click.pass_context
def main(ctx, seed, jobs, degree_cap, field, out):
    """Exact toolkit for graded matrix factorizations and their windows."""
    ctx.obj = Options(seed=seed, jobs=max(1, jobs), degree_cap=degree_cap,
                      field_name=field, out=out)


@main.command()
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with ring and generators.")
@click.pass_obj
def gb(options, payload):
    """Groebner basis of an ideal."""
    _finish(options, ("groebner", "basis"), _load_payload(payload))


@main.command()
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with ring, generators and element.")
@click.pass_obj
def nf(options, payload):
    """Normal form of an element modulo an ideal."""
    _finish(options, ("groebner", "normal_form"), _load_payload(payload))


@main.command()
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with ring and matrix columns.")
@click.pass_obj
def subquotient(options, payload):
    """Present a kernel-modulo-image subquotient module."""
    _finish(options, ("groebner", "subquotient"), _load_payload(payload))


@main.group("windows")
def windows_group():
    """Weight-window combinatorics."""


@windows_group.command("sets")
@click.option("--n", required=True, type=int)
@click.option("--l", required=True, type=int)
@click.pass_obj
def windows_sets(options, n, l):
    """Enumerate the window regions for given parameters."""
    _finish(options, ("windows", "sets"), {"n": n, "l": l})


@windows_group.command("reduce")
@click.option("--weights", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file: list of weight pairs (and optionally n).")
@click.option("--n", type=int, default=None,
              help="Window parameter (overrides the file).")
@click.pass_obj
def windows_reduce(options, weights, n):
    """Reduce a swap-symmetric weight set into the positive window."""
    try:
        data = json.loads(pathlib.Path(weights).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        click.echo("error: %s" % exc, err=True)
        raise SystemExit(EXIT_SCHEMA)
    if isinstance(data, list):
        data = {"weights": data}
    if n is not None:
        data["n"] = n
    if "n" not in data:
        click.echo("error: no window parameter n given", err=True)
        raise SystemExit(EXIT_SCHEMA)
    _finish(options, ("windows", "reduce"), data)


@windows_group.command("exceptional")
@click.option("--n", required=True, type=int)
@click.option("--l", required=True, type=int)
@click.pass_obj
def windows_exceptional(options, n, l):
    """List the irreducibles between the windows with their Hom order."""
    _finish(options, ("windows", "exceptional"), {"n": n, "l": l})


@main.group("clifford")
def clifford_group():
    """Clifford algebras of symmetric forms."""


@clifford_group.command("build")
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with a form description.")
@click.pass_obj
def clifford_build(options, payload):
    """Build an algebra and check its defining relations."""
    _finish(options, ("clifford", "build"), _load_payload(payload))


@clifford_group.command("center")
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with one form or a list of forms.")
@click.pass_obj
def clifford_center(options, payload):
    """Analyze the center of the even part."""
    _finish(options, ("clifford", "center"), _load_payload(payload))


@main.group("pencil")
def pencil_group():
    """Linear systems of symmetric matrices."""


@pencil_group.command("strata")
@click.option("--payload", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file with matrices or a random-pencil request.")
@click.pass_obj
def pencil_strata(options, payload):
    """Corank stratification of a pencil or sampled system."""
    _finish(options, ("clifford", "strata"), _load_payload(payload))


@main.command("run")
@click.argument("scenarios", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def run_cmd(options, scenarios):
    """Run scenario files and compare against their expectations."""
    _report_outcomes(run_scenarios(list(scenarios), options), options)


@main.group("suite")
def suite_group():
    """Bundled scenario suite."""


@suite_group.command("list")
@click.option("--module", default=None, type=click.Choice(list(MODULES)),
              help="Only scenarios for one module.")
@click.pass_obj
def suite_list(options, module):
    """List the bundled scenarios."""
    entries = suite_entries(module)
    if options.out == "json":
        emit([h for _, h in entries], options)
        return
    for _, h in entries:
        click.echo("%-28s %-10s %-20s %s"
                   % (h["file"], h["module"], h["operation"], h["name"]))


@suite_group.command("run")
@click.option("--module", default=None, type=click.Choice(list(MODULES)),
              help="Only scenarios for one module.")
@click.pass_obj
def suite_run(options, module):
    """Run the bundled scenarios."""
    entries = suite_entries(module)
    if not entries:
        click.echo("no scenarios found in %s" % suite_dir(), err=True)
        raise SystemExit(EXIT_SCHEMA)
    _report_outcomes(run_scenarios([p for p, _ in entries], options), options)


if __name__ == "__main__":
    main()
