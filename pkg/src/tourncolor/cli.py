"""Command-line front end.

JSON results go to standard output (every payload carries ``"schema": 1``);
human-readable one-liners go to standard error so pipelines stay clean.
Exit codes: 0 success, 1 verification or precondition failure, 2 usage error,
3 exact computation infeasible at this size.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .chromatic import (
    Coloring,
    dichromatic_bounds,
    dichromatic_number_exact,
    greedy_coloring,
    verify_coloring,
)
from .constructions import (
    PatternMatch,
    contains_pattern,
    orient_from_graph,
    paley_tournament,
    random_graph_with_girth,
    s_tournament,
    verify_pattern,
)
from .core import (
    ExactLimitExceeded,
    FormatError,
    SplitMix64,
    Tournament,
    VertexRangeError,
    full_mask,
    gamma_exact_limit,
    members,
    parse,
    parse_graph,
    random_tournament,
    serialize,
    serialize_graph,
)
from .domination import (
    domination_number_exact,
    greedy_dominating_set,
    verify_domination,
)
from .localglobal import (
    GammaTooSmall,
    MalformedTraceError,
    color_t_local,
    extract_high_chromatic,
    locality,
    theorem_constants,
    trace_from_obj,
    trace_to_obj,
    validate_trace,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _emit(obj: dict) -> None:
    payload = {"schema": 1}
    payload.update(obj)
    sys.stdout.write(json.dumps(payload) + "\n")


def _say(text: str) -> None:
    sys.stderr.write(text + "\n")


def _mask_list(mask: int) -> list[int]:
    return list(members(mask))


def _csv_mask(text: str) -> int:
    mask = 0
    for part in text.split(","):
        part = part.strip()
        if part:
            mask |= 1 << int(part)
    return mask


def _load_tournament(path: str) -> Tournament:
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read())


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# search harness

@dataclass(frozen=True)
class SearchRecord:
    """Outcome of one hill-climb run, reproducible from its own fields."""

    pattern_index: int
    n: int
    seed: int
    budget: int
    gamma: int
    gamma_mode: str
    tournament: Tournament
    pattern_free: bool
    accepted: int


def _gamma_score(T: Tournament) -> tuple[int, str]:
    if T.n <= gamma_exact_limit():
        g, _ = domination_number_exact(T)
        return g, "exact"
    widest = max(((1 << u) | T.rows[u]).bit_count() for u in range(T.n))
    return -(-T.n // widest), "lower-bound"


def _flip_arc(T: Tournament, u: int, v: int) -> Tournament:
    rows = list(T.rows)
    if rows[u] >> v & 1:
        rows[u] &= ~(1 << v)
        rows[v] |= 1 << u
    else:
        rows[v] &= ~(1 << u)
        rows[u] |= 1 << v
    return Tournament(T.n, tuple(rows), validate=False)


def _transitive_tournament(n: int) -> Tournament:
    full = full_mask(n)
    rows = tuple((full >> (v + 1)) << (v + 1) for v in range(n))
    return Tournament(n, rows, validate=False)


def search_si_free(i: int, n: int, budget: int, seed: int) -> SearchRecord:
    """Hill-climb for large domination number among blow-up-free tournaments.

    Starts from a random tournament (or the transitive one when the random
    start already contains the forbidden pattern), then flips one random arc
    per step, rejecting any state that contains the pattern and accepting
    whenever the domination score does not drop.  Budget exhaustion is the
    normal end.
    """
    if i < 2:
        raise ValueError("pattern index below 2 is vacuous")
    if n < 1:
        raise ValueError("need at least one vertex")
    pattern = s_tournament(i)
    rng = SplitMix64(seed)
    current = random_tournament(n, rng.next_word())
    if pattern.n <= n and contains_pattern(current, pattern) is not None:
        current = _transitive_tournament(n)
    score, mode = _gamma_score(current)
    best, best_score, best_mode = current, score, mode
    accepted = 0
    for _ in range(budget):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        cand = _flip_arc(current, u, v)
        if pattern.n <= n and contains_pattern(cand, pattern) is not None:
            continue
        cand_score, cand_mode = _gamma_score(cand)
        if cand_score >= score:
            current, score, mode = cand, cand_score, cand_mode
            accepted += 1
            if cand_score > best_score:
                best, best_score, best_mode = cand, cand_score, cand_mode
    free = pattern.n > best.n or contains_pattern(best, pattern) is None
    return SearchRecord(i, n, seed, budget, best_score, best_mode, best,
                        free, accepted)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_gen(args) -> int:
    if args.kind == "random":
        T = random_tournament(args.n, args.seed)
        _write_text(serialize(T), args.output)
        _say(f"random tournament on {args.n} vertices, seed {args.seed}")
    elif args.kind == "paley":
        T = paley_tournament(args.q)
        _write_text(serialize(T), args.output)
        _say(f"quadratic-residue tournament on {args.q} vertices")
    elif args.kind == "s":
        T = s_tournament(args.i)
        _write_text(serialize(T), args.output)
        _say(f"blow-up tournament level {args.i}: {T.n} vertices")
    elif args.kind == "orient":
        with open(args.graph, "r", encoding="ascii") as fh:
            G = parse_graph(fh.read())
        order = list(range(G.n)) if args.order is None else \
            [int(x) for x in args.order.split(",") if x.strip()]
        T = orient_from_graph(G, order)
        _write_text(serialize(T), args.output)
        _say(f"orientation tournament on {T.n} vertices")
    else:  # girthgraph
        G = random_graph_with_girth(args.n, args.min_girth, args.edges, args.seed)
        _write_text(serialize_graph(G), args.output)
        _say(f"graph on {args.n} vertices with {G.edge_count()} edges, "
             f"girth kept at {args.min_girth} or more")
    return EXIT_OK


def _cmd_chi(args) -> int:
    T = _load_tournament(args.file)
    scope = full_mask(T.n)
    if args.greedy:
        witness = greedy_coloring(T, scope)
        _emit({"n": T.n, "mode": "greedy", "upper": len(witness),
               "classes": witness.as_lists()})
        _say(f"greedy coloring with {len(witness)} classes on {T.n} vertices")
    elif args.bounds:
        lo, hi, witness = dichromatic_bounds(T, scope)
        _emit({"n": T.n, "mode": "bounds", "lower": lo, "upper": hi,
               "classes": witness.as_lists()})
        _say(f"dichromatic number between {lo} and {hi} on {T.n} vertices")
    else:
        chi, witness = dichromatic_number_exact(
            T, scope, canonical=args.canonical, threads=args.threads)
        _emit({"n": T.n, "mode": "exact", "chi": chi,
               "classes": witness.as_lists()})
        _say(f"dichromatic number {chi} on {T.n} vertices")
    return EXIT_OK


def _cmd_gamma(args) -> int:
    T = _load_tournament(args.file)
    target = full_mask(T.n) if args.subset is None else _csv_mask(args.subset)
    if args.greedy:
        witness = greedy_dominating_set(T, target)
        _emit({"n": T.n, "mode": "greedy", "gamma_upper": witness.size(),
               "dominators": _mask_list(witness.dominators),
               "target": _mask_list(target)})
        _say(f"greedy dominating set of size {witness.size()}")
    else:
        g, witness = domination_number_exact(T, target)
        _emit({"n": T.n, "mode": "exact", "gamma": g,
               "dominators": _mask_list(witness.dominators),
               "target": _mask_list(target)})
        _say(f"domination number {g}")
    return EXIT_OK


def _cmd_locality(args) -> int:
    T = _load_tournament(args.file)
    t = locality(T)
    _emit({"n": T.n, "t": t})
    _say(f"locality {t} on {T.n} vertices")
    return EXIT_OK


def _cmd_color_local(args) -> int:
    T = _load_tournament(args.file)
    report = color_t_local(T)
    _emit({
        "n": T.n,
        "t": report.t,
        "mode": report.mode,
        "dominators": _mask_list(report.dominators),
        "bound": report.bound,
        "count": len(report.coloring),
        "local_chi": list(report.local_chi),
        "classes": report.coloring.as_lists(),
    })
    _say(f"colored with {len(report.coloring)} classes "
         f"(bound {report.bound}, t={report.t}, {report.mode} dominators)")
    return EXIT_OK


def _cmd_extract(args) -> int:
    T = _load_tournament(args.file)
    aprime, trace = extract_high_chromatic(T, args.k, permissive=args.permissive)
    _emit({"n": T.n, "k": args.k, "aprime": _mask_list(aprime),
           "trace": trace_to_obj(trace)})
    _say(f"extracted {aprime.bit_count()} vertices certified at level {args.k}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    T = _load_tournament(args.file)
    witness = _load_json(args.witness)
    if args.what == "coloring":
        classes = Coloring.from_lists(witness["classes"])
        target = full_mask(T.n) if "target" not in witness else \
            _list_mask(witness["target"])
        ok = verify_coloring(T, target, classes)
        _emit({"kind": "coloring", "valid": ok})
        _say("coloring valid" if ok else "coloring invalid")
        return EXIT_OK if ok else EXIT_INVALID
    if args.what == "domination":
        dominators = _list_mask(witness["dominators"])
        target = full_mask(T.n) if "target" not in witness else \
            _list_mask(witness["target"])
        ok = verify_domination(T, target, dominators)
        _emit({"kind": "domination", "valid": ok})
        _say("dominating set valid" if ok else "dominating set invalid")
        return EXIT_OK if ok else EXIT_INVALID
    if args.what == "trace":
        trace = trace_from_obj(witness["trace"])
        notes: list[str] = []
        violations = validate_trace(T, int(witness["k"]), trace, notes)
        ok = not violations
        _emit({"kind": "trace", "valid": ok, "violations": violations,
               "notes": notes})
        _say("trace valid" if ok else
             f"trace invalid: {len(violations)} violation(s)")
        return EXIT_OK if ok else EXIT_INVALID
    # pattern
    pattern = parse(witness["pattern"])
    match = PatternMatch(tuple(int(v) for v in witness["image"]))
    ok = verify_pattern(T, pattern, match)
    _emit({"kind": "pattern", "valid": ok})
    _say("pattern embedding valid" if ok else "pattern embedding invalid")
    return EXIT_OK if ok else EXIT_INVALID


def _list_mask(values) -> int:
    mask = 0
    for v in values:
        mask |= 1 << int(v)
    return mask


def _cmd_search(args) -> int:
    record = search_si_free(args.i, args.n, args.budget, args.seed)
    _emit({
        "target": "s-free",
        "i": record.pattern_index,
        "n": record.n,
        "seed": record.seed,
        "budget": record.budget,
        "gamma": record.gamma,
        "gamma_mode": record.gamma_mode,
        "pattern_free": record.pattern_free,
        "accepted": record.accepted,
        "tournament": serialize(record.tournament),
    })
    _say(f"best domination score {record.gamma} ({record.gamma_mode}) "
         f"after {record.accepted} accepted steps")
    return EXIT_OK


def _cmd_constants(args) -> int:
    c = theorem_constants(args.k)
    _emit({"k": c.k, "K": c.K, "l": c.l})
    _say(f"level {c.k}: K={c.K}, l={c.l}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourncolor",
        description="Tournament coloring and domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate tournaments and graphs")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_random = gen_sub.add_parser("random")
    g_random.add_argument("--n", type=int, required=True)
    g_random.add_argument("--seed", type=int, default=0)
    g_random.add_argument("-o", "--output")
    g_paley = gen_sub.add_parser("paley")
    g_paley.add_argument("--q", type=int, required=True)
    g_paley.add_argument("-o", "--output")
    g_s = gen_sub.add_parser("s")
    g_s.add_argument("--i", type=int, required=True)
    g_s.add_argument("-o", "--output")
    g_orient = gen_sub.add_parser("orient")
    g_orient.add_argument("graph")
    g_orient.add_argument("--order")
    g_orient.add_argument("-o", "--output")
    g_girth = gen_sub.add_parser("girthgraph")
    g_girth.add_argument("--n", type=int, required=True)
    g_girth.add_argument("--min-girth", type=int, required=True)
    g_girth.add_argument("--edges", type=int, required=True)
    g_girth.add_argument("--seed", type=int, default=0)
    g_girth.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_gen)

    chi = sub.add_parser("chi", help="dichromatic number")
    chi.add_argument("file")
    mode = chi.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--greedy", action="store_true")
    mode.add_argument("--bounds", action="store_true")
    chi.add_argument("--canonical", action="store_true")
    chi.add_argument("--threads", type=int, default=1)
    chi.set_defaults(func=_cmd_chi)

    gamma = sub.add_parser("gamma", help="domination number")
    gamma.add_argument("file")
    gmode = gamma.add_mutually_exclusive_group()
    gmode.add_argument("--exact", action="store_true")
    gmode.add_argument("--greedy", action="store_true")
    gamma.add_argument("--subset", help="comma-separated target vertices")
    gamma.set_defaults(func=_cmd_gamma)

    loc = sub.add_parser("locality", help="largest out-neighborhood dichromatic number")
    loc.add_argument("file")
    loc.set_defaults(func=_cmd_locality)

    clocal = sub.add_parser("color-local", help="domination-based coloring")
    clocal.add_argument("file")
    clocal.set_defaults(func=_cmd_color_local)

    ext = sub.add_parser("extract", help="high-dichromatic subtournament extraction")
    ext.add_argument("file")
    ext.add_argument("--k", type=int, required=True)
    ext.add_argument("--permissive", action="store_true")
    ext.set_defaults(func=_cmd_extract)

    ver = sub.add_parser("verify", help="check a witness against a tournament")
    ver.add_argument("what", choices=["coloring", "domination", "trace", "pattern"])
    ver.add_argument("file")
    ver.add_argument("witness")
    ver.set_defaults(func=_cmd_verify)

    search = sub.add_parser("search", help="randomized extremal search")
    search_sub = search.add_subparsers(dest="target", required=True)
    sfree = search_sub.add_parser("s-free")
    sfree.add_argument("--i", type=int, required=True)
    sfree.add_argument("--n", type=int, required=True)
    sfree.add_argument("--budget", type=int, required=True)
    sfree.add_argument("--seed", type=int, default=0)
    search.set_defaults(func=_cmd_search)

    const = sub.add_parser("constants", help="level constants (K, l)")
    const.add_argument("--k", type=int, required=True)
    const.set_defaults(func=_cmd_constants)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ExactLimitExceeded as exc:
        _emit({"error": str(exc)})
        _say(f"infeasible at exact scale: {exc}")
        return EXIT_INFEASIBLE
    except GammaTooSmall as exc:
        _emit({"error": str(exc)})
        _say(f"precondition failed: {exc}")
        return EXIT_INVALID
    except (FormatError, MalformedTraceError, VertexRangeError, ValueError,
            OSError, KeyError) as exc:
        _say(f"usage error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
