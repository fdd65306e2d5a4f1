"""Named verification checks over enumerated instances.

Every identity the package is built around is a named check producing one
pass/fail result per instance.  The CLI groups them into suites; the
acceptance tests run the same code at fixed ranks.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import classify as cl
from . import glue, models, rep
from .quiver import all_orientations, classify_tree, d_quiver, path_quiver, reflect
from .tilting import (
    closed_form_counts,
    degree_stats,
    enumerate_tilting,
    ext_table,
    hasse_check,
    leq,
    module_dim,
    tilting_quiver,
)


@dataclass
class CheckResult:
    check: str
    instance: str
    status: str
    detail: str = ""


def _res(check, instance, ok, detail=""):
    return CheckResult(check, instance, "pass" if ok else "fail", "" if ok else detail)


def _a_quivers(max_rank, cap):
    return [(f"A{n}", path_quiver(n)) for n in range(1, min(max_rank, cap) + 1)]


def _d_quivers(max_rank, cap_fork, lo=2):
    top = min(max_rank - 1, cap_fork)
    return [(f"Q{n}", d_quiver(n)) for n in range(lo, top + 1)]


def _oriented_instances(max_rank):
    out = []
    if max_rank >= 4:
        for bits, q in all_orientations("A", 4):
            out.append(("A4[" + "".join("1" if b else "0" for b in bits) + "]", q))
        for bits, q in all_orientations("D", 3):
            out.append(("Q3[" + "".join("1" if b else "0" for b in bits) + "]", q))
    return out


def _hasse_instances(max_rank):
    return _a_quivers(max_rank, 6) + _d_quivers(max_rank, 4) + _oriented_instances(max_rank)


def _glue_instances(max_rank):
    out = []
    if max_rank >= 4:
        out.append(("A4", path_quiver(4)))
    if max_rank >= 5:
        out.append(("A5", path_quiver(5)))
    if max_rank >= 4:
        out.append(("Q3", d_quiver(3)))
    return out


def _glue_leaves(q):
    return [x for x in q.vertices if q.is_leaf(x) and (q.is_source(x) or q.is_sink(x))]


# ------------------------------------------------------------------ counts

def check_counts_a(max_rank):
    out = []
    for name, q in _a_quivers(max_rank, 9):
        n = len(q.vertices)
        want = closed_form_counts("A", n)
        tq = tilting_quiver(q)
        got = (len(tq.nodes), len(tq.arrows))
        out.append(_res("closed-form-counts-A", name, got == want, f"got {got}, want {want}"))
    return out


def check_counts_d(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 7):
        m = len(q.vertices)
        want = closed_form_counts("D", m)
        tq = tilting_quiver(q)
        got = (len(tq.nodes), len(tq.arrows))
        out.append(_res("closed-form-counts-D", name, got == want, f"got {got}, want {want}"))
    return out


def check_orientation_invariance(max_rank):
    out = []
    targets = [("A", n, n) for n in range(2, min(max_rank, 5) + 1)]
    targets += [("D", fork + 1, fork) for fork in range(3, min(max_rank - 1, 4) + 1)]
    for kind, rank, param in targets:
        reference = closed_form_counts(kind, rank)
        pairs = set()
        for _, q in all_orientations(kind, param):
            tq = tilting_quiver(q)
            pairs.add((len(tq.nodes), len(tq.arrows)))
        out.append(
            _res(
                "orientation-invariance",
                f"{kind}{rank}",
                pairs == {reference},
                f"distinct counts {sorted(pairs)}, want {{{reference}}}",
            )
        )
    return out


def check_reflection_invariance(max_rank):
    out = []
    instances = []
    if max_rank >= 4:
        instances.append(("A4", list(all_orientations("A", 4))))
        instances.append(("Q3", list(all_orientations("D", 3))))
    if max_rank >= 5:
        instances.append(("A5", list(all_orientations("A", 5))))
    for name, oriented in instances:
        ok = True
        detail = ""
        for bits, q in oriented:
            total = len(tilting_quiver(q).arrows)
            for x in q.vertices:
                if q.is_source(x) or q.is_sink(x):
                    other = len(tilting_quiver(reflect(q, x)).arrows)
                    if other != total:
                        ok = False
                        detail = f"orientation {bits} vertex {x}: {total} vs {other}"
        out.append(_res("reflection-arrow-invariance", name, ok, detail))
    return out


# ------------------------------------------------------------------ hasse

def check_hasse(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        report = hasse_check(ext_table(q), tilting_quiver(q))
        out.append(
            _res(
                "hasse-property",
                name,
                report.ok,
                f"missing {report.missing[:3]}, extra {report.extra[:3]}",
            )
        )
    return out


def check_poset_axioms(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        try:
            glue.poset_view(q).validate()
            out.append(_res("poset-axioms", name, True))
        except RuntimeError as exc:
            out.append(_res("poset-axioms", name, False, str(exc)))
    return out


def check_unique_extremes(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        table = ext_table(q)
        tq = tilting_quiver(q)
        sources = [i for i in range(len(tq.nodes)) if tq.in_deg[i] == 0]
        sinks = [i for i in range(len(tq.nodes)) if tq.out_deg[i] == 0]
        proj_dims = rep.projective_dim_vectors(q)
        proj_ids = tuple(
            sorted(table.id_by_dim[tuple(d[v] for v in q.vertices)] for d in proj_dims.values())
        )
        ok = (
            len(sources) == 1
            and len(sinks) == 1
            and tq.nodes[sources[0]].summands == proj_ids
        )
        out.append(
            _res(
                "unique-extremes",
                name,
                ok,
                f"sources {sources}, sinks {sinks}",
            )
        )
    return out


def check_half_degree_sum(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        tq = tilting_quiver(q)
        ok = 2 * len(tq.arrows) == sum(tq.delta)
        out.append(_res("half-degree-sum", name, ok, f"{len(tq.arrows)} vs {sum(tq.delta)}"))
    return out


# ------------------------------------------------------------------ degrees

def check_degree_formula(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        report = degree_stats(tilting_quiver(q))
        out.append(
            _res(
                "degree-formula",
                name,
                report.formula_ok,
                f"mismatches {report.mismatches[:3]}",
            )
        )
    return out


def check_degree_constant_a(max_rank):
    out = []
    for name, q in _a_quivers(max_rank, 6):
        n = len(q.vertices)
        report = degree_stats(tilting_quiver(q))
        ok = report.histogram == {n - 1: len(enumerate_tilting(q))}
        out.append(_res("degree-constant-A", name, ok, f"histogram {report.histogram}"))
    return out


def check_degree_histogram_d(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5, lo=3):
        n = len(q.vertices) - 1
        t2, t1, t0 = cl.class_count_formulas(n)
        want = {n - 1: t2, n: t1, n + 1: t0}
        report = degree_stats(tilting_quiver(q))
        out.append(
            _res(
                "degree-histogram-D",
                name,
                report.histogram == want,
                f"got {report.histogram}, want {want}",
            )
        )
    return out


# ------------------------------------------------------------------ oracle

def check_ext_predicate(max_rank):
    out = []
    instances = _a_quivers(max_rank, 6) + _d_quivers(max_rank, 5)
    for name, q in instances:
        kind, param = classify_tree(q)
        table = ext_table(q)
        k = len(table)
        ok = True
        detail = ""
        for i in range(k):
            for j in range(i, k):
                xi, xj = table.indecs[i].model, table.indecs[j].model
                pred = models.ext_vanish_pair(kind, xi, xj, param)
                real = table.ext[i][j] == 0 and table.ext[j][i] == 0
                if pred != real:
                    ok = False
                    detail = f"{models.render(xi)} vs {models.render(xj)}: predicate {pred}, ext {real}"
                    break
            if not ok:
                break
        out.append(_res("ext-oracle-agreement", name, ok, detail))
    return out


def check_ar_duality(max_rank):
    out = []
    instances = _a_quivers(max_rank, 6) + _d_quivers(max_rank, 5)
    for name, q in instances:
        kind, param = classify_tree(q)
        table = ext_table(q)
        k = len(table)
        ok = True
        detail = ""
        for i in range(k):
            translate = models.ar_translate(kind, table.indecs[i].model, param)
            if translate is None:
                tau_col = None
            else:
                tau_dim = models.model_dim(kind, translate, param)
                tau_col = table.id_by_dim[tuple(tau_dim[v] for v in q.vertices)]
            for j in range(k):
                want = table.hom[j][tau_col] if tau_col is not None else 0
                if table.ext[i][j] != want:
                    ok = False
                    detail = f"ext({i},{j}) = {table.ext[i][j]} but hom(N, translate) = {want}"
                    break
            if not ok:
                break
        out.append(_res("ar-duality", name, ok, detail))
    return out


def check_hom_criterion_a(max_rank):
    out = []
    for name, q in _a_quivers(max_rank, 6):
        table = ext_table(q)
        k = len(table)
        ok = True
        detail = ""
        for i in range(k):
            for j in range(k):
                xi, xj = table.indecs[i].model, table.indecs[j].model
                pred = models.a_hom_nonzero(xi, xj)
                if (table.hom[i][j] != 0) != pred:
                    ok = False
                    detail = f"hom {models.render(xi)} -> {models.render(xj)}"
        out.append(_res("hom-criterion-A", name, ok, detail))
    return out


def check_positive_roots(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        dims = sorted(ind.rep.dim_tuple() for ind in rep.indecomposables(q))
        roots = sorted(rep.positive_roots(q))
        out.append(_res("positive-roots", name, dims == roots, f"{len(dims)} vs {len(roots)}"))
    return out


def check_rigidity(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        table = ext_table(q)
        ok = all(
            table.hom[i][i] == 1 and table.ext[i][i] == 0 for i in range(len(table))
        )
        out.append(_res("rigidity", name, ok))
    return out


def check_euler_roots(max_rank):
    out = []
    for name, q in _hasse_instances(max_rank):
        verts = q.vertices
        ok = all(
            rep.euler_form(q, dict(zip(verts, d)), dict(zip(verts, d))) == 1
            for d in rep.positive_roots(q)
        )
        out.append(_res("euler-root-norm", name, ok))
    return out


# ------------------------------------------------------------------ glue

def check_leaf_closure(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        for x in _glue_leaves(q):
            report = glue.closure_report(q, x)
            out.append(
                _res(
                    "leaf-projection-closure",
                    f"{name}:x={x}",
                    report.ok,
                    f"section {report.section_ok}, closure {report.closure_ok}, "
                    f"equality {report.equality_ok}, monotone {report.monotone_ok}",
                )
            )
    return out


def check_glued_order(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        for x in _glue_leaves(q):
            report = glue.glued_order_report(q, x)
            out.append(
                _res(
                    "glued-order",
                    f"{name}:x={x}",
                    report.ok,
                    f"cross {report.cross_ok}, forbidden {report.forbidden_ok}",
                )
            )
    return out


def check_complement_transport(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        for x in _glue_leaves(q):
            report = glue.transport_complement(q, x)
            out.append(
                _res(
                    "complement-transport",
                    f"{name}:x={x}",
                    report.ok,
                    f"bijective {report.bijective}, order {report.order_iso}, "
                    f"commutes {report.commutes}",
                )
            )
    return out


def check_crossing_arrows(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        for x in _glue_leaves(q):
            report = glue.crossing_report(q, x)
            inside, _ = glue.split_by_simple(q, x)
            ok = report.ok and len(report.crossing) == len(inside)
            out.append(
                _res(
                    "crossing-arrow-bijection",
                    f"{name}:x={x}",
                    ok,
                    f"{len(report.crossing)} crossing vs {len(inside)} modules",
                )
            )
    return out


def check_arrow_decomposition(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        for x in _glue_leaves(q):
            report = glue.arrow_decomposition(q, x)
            out.append(
                _res(
                    "arrow-decomposition",
                    f"{name}:x={x}",
                    report.ok,
                    f"{report.small}+{report.outside}+{report.crossing} vs {report.total}, "
                    f"reflected {report.reflected_total}",
                )
            )
    return out


def check_simple_membership(max_rank):
    out = []
    for name, q in _glue_instances(max_rank):
        table = ext_table(q)
        ok = True
        detail = ""
        for x in q.vertices:
            if not (q.is_sink(x) or q.is_source(x)):
                continue
            s = glue.simple_summand_id(table, x)
            for t in enumerate_tilting(q):
                if s in t.summands and module_dim(table, t)[x] < 2:
                    ok = False
                    detail = f"vertex {x}, module {t.summands}"
        out.append(_res("simple-membership-dims", name, ok, detail))
    return out


# ------------------------------------------------------------------ taxonomy

def check_class_partition(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5):
        table = ext_table(q)
        ok = True
        detail = ""
        for t in enumerate_tilting(q):
            c = cl.classify(table, t)
            if c.bucket not in ("T0", "T1", "T2") or c.problems:
                ok = False
                detail = f"module {t.summands}: {c.bucket} {c.problems}"
        out.append(_res("degree-class-partition", name, ok, detail))
    return out


def check_class_a_empty(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5):
        table = ext_table(q)
        bad = [
            t.summands
            for t in enumerate_tilting(q)
            if any(tag.startswith("A") for tag in cl.classify(table, t).tags)
        ]
        out.append(_res("fork-class-A-empty", name, not bad, f"members {bad[:3]}"))
    return out


def check_class_counts(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5, lo=3):
        n = len(q.vertices) - 1
        table = ext_table(q)
        buckets = Counter(cl.classify(table, t).bucket for t in enumerate_tilting(q))
        t2, t1, t0 = cl.class_count_formulas(n)
        want = {"T2": t2, "T1": t1, "T0": t0}
        out.append(
            _res(
                "degree-class-counts",
                name,
                dict(buckets) == want,
                f"got {dict(buckets)}, want {want}",
            )
        )
    return out


def check_bijection_path(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 4, lo=3):
        n = len(q.vertices) - 1
        table = ext_table(q)
        path_sets = set(cl.tilting_model_sets(path_quiver(n)))
        ok = True
        detail = ""
        images = {"+": [], "-": []}
        for t in enumerate_tilting(q):
            c = cl.classify(table, t)
            if not any(tag.startswith("B") for tag in c.tags):
                continue
            j, sign, ivs = cl.to_path_tilting(table, t)
            back = cl.from_path_tilting(n, j, sign, ivs)
            if ivs not in path_sets or cl.min_end_statistic(ivs, n) != j:
                ok = False
                detail = f"image of {t.summands} off"
            if back != frozenset(cl.summand_models(table, t)):
                ok = False
                detail = f"round trip failed on {t.summands}"
            images[sign].append(ivs)
        want_total = {s for s in path_sets if cl.min_end_statistic(s, n) >= 1}
        for sign in "+-":
            got = images[sign]
            if len(got) != len(set(got)) or set(got) != want_total:
                ok = False
                detail = f"sign {sign}: image is not the filtered path family"
            if len(got) != cl.b_count_formula(n):
                ok = False
                detail = f"sign {sign}: {len(got)} images, want {cl.b_count_formula(n)}"
        out.append(_res("fork-bijection-path", name, ok, detail))
    return out


def check_bijection_shrink(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 4, lo=3):
        n = len(q.vertices) - 1
        table = ext_table(q)
        small_sets = set(cl.tilting_model_sets(d_quiver(n - 1)))
        ok = True
        detail = ""
        images = []
        for t in enumerate_tilting(q):
            c = cl.classify(table, t)
            if not any(tag.startswith("C") for tag in c.tags):
                continue
            j, ms = cl.to_smaller_fork(table, t)
            back = cl.from_smaller_fork(n, j, ms)
            if ms not in small_sets or cl.fork_reach_statistic(ms) != j - 1:
                ok = False
                detail = f"image of {t.summands} off"
            if back != frozenset(cl.summand_models(table, t)):
                ok = False
                detail = f"round trip failed on {t.summands}"
            images.append(ms)
        if len(images) != len(set(images)) or set(images) != small_sets:
            ok = False
            detail = "images do not exhaust the smaller fork quiver"
        if len(images) != cl.c_count_formula(n):
            ok = False
            detail = f"{len(images)} images, want {cl.c_count_formula(n)}"
        out.append(_res("fork-bijection-shrink", name, ok, detail))
    return out


def check_product_split(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 4, lo=3):
        n = len(q.vertices) - 1
        table = ext_table(q)
        ok = True
        detail = ""
        fibers = Counter()
        t1_total = 0
        b_total = 0
        for t in enumerate_tilting(q):
            c = cl.classify(table, t)
            if c.bucket != "T1":
                continue
            t1_total += 1
            if any(tag.startswith("B") for tag in c.tags):
                b_total += 1
                continue
            i, left, right = cl.split_product(table, t)
            fibers[i] += 1
            if cl.unsplit_product(n, i, left, right) != frozenset(cl.summand_models(table, t)):
                ok = False
                detail = f"round trip failed on {t.summands}"
        for i, size in sorted(fibers.items()):
            small_fork = n - i + 1
            table_small = ext_table(d_quiver(small_fork))
            right_family = [
                t
                for t in enumerate_tilting(d_quiver(small_fork))
                if module_dim(table_small, t)["1"] == 1
                and cl.classify(table_small, t).bucket == "T1"
            ]
            want = cl.catalan(i - 1) * len(right_family)
            if size != want:
                ok = False
                detail = f"fiber {i}: {size} vs {want}"
        if sum(fibers.values()) + b_total != t1_total:
            ok = False
            detail = "fibers and fork-tip classes do not exhaust the middle class"
        out.append(_res("product-split", name, ok, detail))
    return out


def check_sincere_cover(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5):
        table = ext_table(q)
        bad = [
            t.summands
            for t in enumerate_tilting(q)
            if cl.sincere_stem_summand(table, t) is None
        ]
        out.append(_res("stem-cover-exists", name, not bad, f"members {bad[:3]}"))
    return out


def check_fork_pair(max_rank):
    out = []
    for name, q in _d_quivers(max_rank, 5):
        n = len(q.vertices) - 1
        table = ext_table(q)
        ok = True
        detail = ""
        for t in enumerate_tilting(q):
            mods = set(cl.summand_models(table, t))
            if models.DIndec("L", 0, n - 1) in mods:
                if not (
                    models.DIndec("L+", 0, n) in mods and models.DIndec("L-", 0, n) in mods
                ):
                    ok = False
                    detail = f"module {t.summands}"
        out.append(_res("full-stem-forces-fork-pair", name, ok, detail))
    return out


SUITES = {
    "counts": [check_counts_a, check_counts_d, check_orientation_invariance],
    "hasse": [check_hasse, check_poset_axioms, check_unique_extremes, check_half_degree_sum],
    "degrees": [check_degree_formula, check_degree_constant_a, check_degree_histogram_d],
    "oracle": [
        check_ext_predicate,
        check_ar_duality,
        check_hom_criterion_a,
        check_positive_roots,
        check_rigidity,
        check_euler_roots,
    ],
    "glue": [
        check_leaf_closure,
        check_glued_order,
        check_complement_transport,
        check_crossing_arrows,
        check_arrow_decomposition,
        check_simple_membership,
        check_reflection_invariance,
    ],
    "taxonomy": [
        check_class_partition,
        check_class_a_empty,
        check_class_counts,
        check_bijection_path,
        check_bijection_shrink,
        check_product_split,
        check_sincere_cover,
        check_fork_pair,
    ],
}

SUITE_ORDER = ["counts", "hasse", "degrees", "oracle", "glue", "taxonomy"]


def run_suite(suite, max_rank):
    """Run one suite (or "all") and return the ordered check results."""
    if suite == "all":
        names = SUITE_ORDER
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for name in names:
        for fn in SUITES[name]:
            results.extend(fn(max_rank))
    return results
