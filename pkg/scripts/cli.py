from __future__ import annotations

import argparse
import random
import sys
import pandas as pd
from settings import DEFAULT_SEED, DEGREE_BOUND, RIGIDITY_BOUND, SAMPLE_DENOMINATOR, logging
from scripts.braids import BraidFamily, SeriesConvention
from scripts.braids.presentations import build_presentation, mu_assignment, mu_homomorphism, normal_series_factors
from scripts.braids.rewriting import TransversalStrategy, regular_coset_table, rewrite_subgroup_presentation
from scripts.groups.parse import format_word, load_presentation, presentation_payload
from scripts.groups.permutations import cycle_notation, evaluate_perm, from_one_line, one_line, verify_perm_hom
from scripts.groups.smith import AbelianInvariants, abelian_invariants
from scripts.payload_keys import *
from scripts.report import CommandResult, Status, render
from scripts.simplicial import EdgeSource
from scripts.simplicial.audit import Finding, audit_lemmas
from scripts.simplicial.differences import parse_differences, vertex_set
from scripts.simplicial.simplices import enumerate_simplices, max_dimension, normalize_simplex, orbit_classify
from scripts.simplicial.tame import induced_vertex_map, probe_simplex, tame_descriptor
from scripts.torus import LatticeClass, lattice_class
from scripts.torus.automorphisms import aut_apply, diagonal_orbit_equal, random_automorphism, rigidity_counterexamples
from scripts.torus.exceptional import is_exceptional_exact, is_exceptional_necessary
from scripts.torus.points import endo_kernel, parse_configuration
from scripts.torus.ring import marker_group, marker_matrix, parse_element, ring_norm


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    ''' argparse that raises instead of exiting, so usage errors map to exit code 1 '''

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ─────────────────────────────────────────────────────────────
# HELPERS
# ─────────────────────────────────────────────────────────────

def _invariants_payload(invariants: AbelianInvariants) -> dict:
    return {TORSION: list(invariants.torsion), FREE_RANK: invariants.free_rank, INVARIANTS: str(invariants)}


def _simplex_text(simplex) -> str:
    return "{" + "; ".join(str(vertex) for vertex in simplex) + "}"


def _findings_table(findings: list[Finding]) -> pd.DataFrame:
    return pd.DataFrame([{CHECK: f.check, DETAIL: f.detail} for f in findings], columns=[CHECK, DETAIL])


def _lattices(name: str) -> list[LatticeClass]:
    return list(LatticeClass) if name == "all" else [lattice_class(name)]


# ─────────────────────────────────────────────────────────────
# GROUP COMMANDS
# ─────────────────────────────────────────────────────────────

def cmd_present(args) -> CommandResult:
    p = build_presentation(BraidFamily(args.group), args.n)
    table = pd.DataFrame({
        "index": range(len(p.relators)),
        "family": [p.label(index) for index in range(len(p.relators))],
        "relator": [format_word(word, p.names) for word in p.relators],
    })
    return CommandResult(Status.OK, {
        GROUP: args.group,
        STRANDS: args.n,
        GENERATOR_COUNT: p.rank,
        RELATOR_COUNT: len(p.relators),
        GENERATORS: p.names,
        PRESENTATION: presentation_payload(p),
    }, table)


def cmd_abelianize(args) -> CommandResult:
    if args.input:
        p = load_presentation(args.input)
    elif args.n is not None:
        p = build_presentation(BraidFamily(args.group), args.n)
    else:
        raise UsageError("abelianize needs --in PATH or -n N")
    return CommandResult(Status.OK, {GENERATOR_COUNT: p.rank, RELATOR_COUNT: len(p.relators), **_invariants_payload(abelian_invariants(p))})


def cmd_mu_check(args) -> CommandResult:
    p = build_presentation(BraidFamily(args.group), args.n)
    homomorphism = mu_assignment(p, args.n)
    check = verify_perm_hom(homomorphism)
    table = pd.DataFrame({
        "index": range(len(p.relators)),
        "family": [p.label(index) for index in range(len(p.relators))],
        "image": [cycle_notation(evaluate_perm(homomorphism, word)) for word in p.relators],
    })
    payload = {
        GROUP: args.group,
        STRANDS: args.n,
        DEGREE: args.n,
        IMAGES: {name: cycle_notation(image) for name, image in zip(p.names, homomorphism.images)},
        VERIFIED: check.ok,
        VIOLATIONS: list(check.violations),
    }
    if check.ok:
        payload.update({ORDER: check.order, TRANSITIVE: check.transitive})
    return CommandResult(Status.OK if check.ok else Status.FINDING, payload, table)


def cmd_normal_series(args) -> CommandResult:
    report = normal_series_factors(args.n, SeriesConvention(args.convention))
    return CommandResult(Status.OK, {
        STRANDS: report.n, CONVENTION: args.convention, CHAIN: list(report.chain), FACTORS: list(report.factors),
    })


def cmd_pure_subgroup(args) -> CommandResult:
    p = build_presentation(BraidFamily(args.group), args.n)
    table = regular_coset_table(p, mu_homomorphism(p, args.n), args.degree_bound)
    subgroup = rewrite_subgroup_presentation(table, TransversalStrategy(args.transversal), args.simplify)
    names = subgroup.presentation.names
    payload = {
        GROUP: args.group,
        STRANDS: args.n,
        DEGREE: subgroup.degree,
        TRANSVERSAL: subgroup.strategy.value,
        SIMPLIFIED: args.simplify,
        GENERATOR_COUNT: subgroup.presentation.rank,
        RELATOR_COUNT: len(subgroup.presentation.relators),
        REWRITTEN_COUNT: subgroup.rewritten_count,
        EMPTY_COUNT: subgroup.empty_count,
        REPRESENTATIVES: [format_word(word, p.names) for word in subgroup.representatives],
        SCHREIER_GENERATORS: {name: format_word(word, p.names) for name, word in zip(names, subgroup.schreier_words)},
        PRESENTATION: presentation_payload(subgroup.presentation),
    }
    if args.abelianize:
        payload.update(_invariants_payload(abelian_invariants(subgroup.presentation)))
    return CommandResult(Status.OK, payload)


# ─────────────────────────────────────────────────────────────
# TORUS COMMANDS
# ─────────────────────────────────────────────────────────────

def cmd_lattice_markers(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    group = marker_group(lattice)
    rows = [
        {
            UNIT: str(unit),
            "canonical": unit in group.canonical,
            NORM: ring_norm(lattice, unit),
            MATRIX: str([list(row) for row in marker_matrix(lattice, unit).entries]),
        }
        for unit in group.units
    ]
    return CommandResult(Status.OK, {
        LATTICE: lattice.value,
        MARKERS: [str(unit) for unit in group.units],
        CANONICAL_MARKERS: [str(unit) for unit in group.canonical],
    }, pd.DataFrame(rows))


def cmd_lattice_kernel(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    alpha = parse_element(args.alpha, lattice)
    kernel = endo_kernel(lattice, alpha)
    return CommandResult(Status.OK, {
        LATTICE: lattice.value,
        ALPHA: str(alpha),
        NORM: ring_norm(lattice, alpha),
        MATRIX: [list(row) for row in marker_matrix(lattice, alpha).entries],
        KERNEL: [str(point) for point in kernel],
    })


def cmd_config_exceptional(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    configuration = parse_configuration(args.points)
    witness = is_exceptional_exact(lattice, configuration)
    payload = {
        LATTICE: lattice.value,
        POINTS: [str(point) for point in configuration],
        NECESSARY: is_exceptional_necessary(lattice, configuration),
        EXACT: witness is not None,
    }
    if witness:
        payload[WITNESS] = {"i": witness.i, "j": witness.j, ALPHA: str(witness.alpha), NORM: witness.norm}
    return CommandResult(Status.OK, payload)


def cmd_orbit_equal(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    first = parse_configuration(args.q)
    payload = {LATTICE: lattice.value}
    if args.qprime:
        second = parse_configuration(args.qprime)
    else:
        moved = random_automorphism(lattice, random.Random(args.seed), SAMPLE_DENOMINATOR)
        second = aut_apply(lattice, moved, first)
        logging.info(f"No target given, moved the configuration by {moved}")
    payload[TARGET] = [str(point) for point in second]
    automorphism = diagonal_orbit_equal(lattice, first, second)
    payload[ORBIT_EQUAL] = automorphism is not None
    if automorphism:
        payload[AUTOMORPHISM] = {UNIT: str(automorphism.unit), TRANSLATION: str(automorphism.translation)}
    return CommandResult(Status.OK, payload)


# ─────────────────────────────────────────────────────────────
# DIFFERENCE COMPLEX COMMANDS
# ─────────────────────────────────────────────────────────────

def cmd_complex(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    source = EdgeSource(args.graph)
    top = max_dimension(args.n, lattice, source)
    payload = {
        STRANDS: args.n,
        LATTICE: lattice.value,
        GRAPH: source.value,
        VERTEX_COUNT: len(vertex_set(args.n, lattice)),
        MAX_DIMENSION: top,
    }
    table = None
    if args.dim is not None:
        simplices = enumerate_simplices(args.n, lattice, args.dim, source)
        payload.update({DIMENSION: args.dim, SIMPLEX_COUNT: len(simplices), SIMPLICES: [_simplex_text(x) for x in simplices]})
    if args.orbits:
        dimensions = [args.dim] if args.dim is not None else list(range(top + 1))
        rows = []
        for dimension in dimensions:
            report = orbit_classify(args.n, lattice, dimension, source)
            rows.extend(
                {
                    DIMENSION: dimension,
                    REPRESENTATIVE: _simplex_text(orbit.representative),
                    SIZE: orbit.size,
                    NORMAL: ", ".join(_simplex_text(x) for x in orbit.normal),
                }
                for orbit in report.orbits
            )
        payload[ORBITS] = rows
        table = pd.DataFrame(rows, columns=[DIMENSION, REPRESENTATIVE, SIZE, NORMAL])
    status = Status.OK
    if args.audit:
        report = audit_lemmas(args.n, lattice)
        payload[CONFIRMED] = report.confirmed
        payload[FINDINGS] = [{CHECK: f.check, DETAIL: f.detail} for f in report.findings]
        if report.findings:
            status, table = Status.FINDING, _findings_table(report.findings)
    return CommandResult(status, payload, table)


def cmd_normalize_simplex(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    form = normalize_simplex(tuple(parse_differences(args.simplex, lattice)), args.n, lattice)
    return CommandResult(Status.OK, {
        STRANDS: args.n,
        LATTICE: lattice.value,
        PERMUTATION: one_line(form.permutation),
        "cycles": cycle_notation(form.permutation),
        FORM: form.kind.value,
        MARKER: str(marker_group(lattice).canonical[form.marker]),
        DIMENSION: form.dimension,
        NORMAL: _simplex_text(form.simplex()),
    })


def cmd_tame_descriptor(args) -> CommandResult:
    lattice = lattice_class(args.lattice)
    probe = probe_simplex(args.n)
    if args.image:
        values = parse_differences(args.image, lattice)
        if len(values) != len(probe):
            raise ValueError(f"Expected {len(probe)} image vertices, got {len(values)}")
        images = dict(zip(probe, values))
    elif args.sigma:
        permutation = from_one_line([int(value) for value in args.sigma.split(",")])
        unit = parse_element(args.unit, lattice)
        images = {vertex: induced_vertex_map(lattice, args.n, permutation, unit, args.sign, vertex) for vertex in probe}
    else:
        raise UsageError("tame-descriptor needs --image or --sigma")
    descriptor = tame_descriptor(args.n, lattice, images)
    return CommandResult(Status.OK, {
        STRANDS: args.n,
        LATTICE: lattice.value,
        SIMPLEX: _simplex_text(images[vertex] for vertex in probe),
        PERMUTATION: one_line(descriptor.permutation),
        MARKER: str(marker_group(lattice).canonical[descriptor.marker]),
        FORM: descriptor.kind.value,
    })


def cmd_audit(args) -> CommandResult:
    ''' Lemma audits per lattice class plus the group-level and rigidity checks '''
    findings: list[Finding] = []
    summary = {}

    torus = build_presentation(BraidFamily.TORUS, args.n)
    invariants = abelian_invariants(torus)
    if invariants != AbelianInvariants((2,), 2):
        findings.append(Finding("abelianization", f"H1 of the torus braid group is {invariants}, expected Z_2 + Z^2"))
    check = verify_perm_hom(mu_assignment(torus, args.n))
    if not check.ok:
        findings.append(Finding("mu", f"relators {list(check.violations)} violated"))
    summary["abelianization"] = str(invariants)

    for lattice in _lattices(args.lattice):
        report = audit_lemmas(args.n, lattice)
        findings.extend(Finding(f"{lattice.value}:{f.check}", f.detail) for f in report.findings)
        summary[lattice.value] = {MAX_DIMENSION: report.max_dimension, CONFIRMED: report.confirmed}
        if args.n > 2:
            for m0, weights, multiplier in rigidity_counterexamples(lattice, args.n, RIGIDITY_BOUND):
                findings.append(Finding(f"{lattice.value}:rigidity", f"m0={m0} weights={list(weights)} gives unit {multiplier}"))

    payload = {STRANDS: args.n, CONFIRMED: not findings, "summary": summary,
               FINDINGS: [{CHECK: f.check, DETAIL: f.detail} for f in findings]}
    return CommandResult(Status.FINDING if findings else Status.OK, payload, _findings_table(findings))


# ─────────────────────────────────────────────────────────────
# PARSER
# ─────────────────────────────────────────────────────────────

def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _Parser(prog="tbl", description="Torus braid groups, lattices and difference complexes")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, **kwargs):
        sub = commands.add_parser(name, parents=[common], **kwargs)
        sub.set_defaults(handler=handler)
        return sub

    def group_arguments(sub, strands_required=True):
        sub.add_argument("--group", choices=[f.value for f in BraidFamily], default=BraidFamily.TORUS.value)
        sub.add_argument("-n", type=int, required=strands_required)

    group_arguments(command("present", cmd_present))

    sub = command("abelianize", cmd_abelianize)
    sub.add_argument("--in", dest="input")
    group_arguments(sub, strands_required=False)

    group_arguments(command("mu-check", cmd_mu_check))

    sub = command("normal-series", cmd_normal_series)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--convention", choices=[c.value for c in SeriesConvention], default=SeriesConvention.PRINTED.value)

    sub = command("pure-subgroup", cmd_pure_subgroup)
    group_arguments(sub)
    sub.add_argument("--transversal", choices=[s.value for s in TransversalStrategy], default=TransversalStrategy.BFS.value)
    sub.add_argument("--simplify", action="store_true")
    sub.add_argument("--abelianize", action="store_true")
    sub.add_argument("--degree-bound", type=int, default=DEGREE_BOUND)

    lattice = commands.add_parser("lattice")
    lattice_commands = lattice.add_subparsers(dest="lattice_command", required=True)
    sub = lattice_commands.add_parser("markers", parents=[common])
    sub.set_defaults(handler=cmd_lattice_markers)
    sub.add_argument("--lattice", required=True)
    sub = lattice_commands.add_parser("kernel", parents=[common])
    sub.set_defaults(handler=cmd_lattice_kernel)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--alpha", required=True)

    config = commands.add_parser("config")
    config_commands = config.add_subparsers(dest="config_command", required=True)
    sub = config_commands.add_parser("exceptional", parents=[common])
    sub.set_defaults(handler=cmd_config_exceptional)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--points", required=True)

    sub = command("orbit-equal", cmd_orbit_equal)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--q", required=True)
    sub.add_argument("--qprime")

    sub = command("complex", cmd_complex)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--dim", type=int)
    sub.add_argument("--orbits", action="store_true")
    sub.add_argument("--audit", action="store_true")
    sub.add_argument("--graph", choices=[s.value for s in EdgeSource], default=EdgeSource.ORACLE.value)

    sub = command("normalize-simplex", cmd_normalize_simplex)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--simplex", required=True)

    sub = command("tame-descriptor", cmd_tame_descriptor)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--lattice", required=True)
    sub.add_argument("--image")
    sub.add_argument("--sigma", help="one-line permutation, e.g. 2,1,3")
    sub.add_argument("--unit", default="1")
    sub.add_argument("--sign", type=int, choices=[1, -1], default=1)

    sub = command("audit", cmd_audit)
    sub.add_argument("-n", type=int, required=True)
    sub.add_argument("--lattice", default="all")

    return parser.parse_args(argv)


def _requested_format(argv: list[str]) -> str:
    ''' Output format for errors raised before argparse finishes '''
    for flag, value in zip(argv, argv[1:]):
        if flag == "--format" and value == "json":
            return "json"
    return "json" if "--format=json" in argv else "text"


def dispatch(argv: list[str] | None = None) -> tuple[CommandResult, str]:
    ''' Runs one command; returns the result and the requested output format '''
    fmt = _requested_format(argv or [])
    try:
        args = _parse_args(argv)
        fmt = args.format
        return args.handler(args), fmt
    except (ValueError, KeyError, FileNotFoundError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        return CommandResult(Status.INPUT_ERROR, {MESSAGE: message}, diagnostics=[message]), fmt


def main(argv: list[str] | None = None) -> int:
    result, fmt = dispatch(sys.argv[1:] if argv is None else argv)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    print(render(result, fmt))
    return result.exit_code


if __name__ == '__main__':  # python -m scripts.cli
    raise SystemExit(main())
