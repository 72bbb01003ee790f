"""Watching the rewriter work, and checking it against blind search.

Run:  python3 demos/oracle_and_traces.py
"""

from pathrw import builtin, normalize, parse_path
from pathrw.oracle import Budget, bfs_rw_eq, explore_class
from pathrw.rewrite import apply_step, format_step, free_normalize, trace
from pathrw.syntax import render_path, render_word


def section(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def main() -> None:
    klein = builtin("klein")
    circle = builtin("circle")

    section("Every normalization is a replayable list of steps")
    start = parse_path(klein, "b * a")
    nf, steps = trace(klein, start)
    print(f"  normalizing {render_path(klein, start)} on the klein bottle:")
    for step in steps:
        print(f"    {format_step(step, klein)}")
    print(f"  result: {render_word(klein, nf.word)}")

    section("Replaying the steps lands on the same answer")
    cur = start
    for step in steps:
        cur = apply_step(klein, cur, step)
    print(f"  replayed end state: {render_path(klein, cur)}")
    assert free_normalize(klein, cur) == nf.word

    section("An independent searcher reaches the same verdicts")
    print("  The search knows only single rewrite steps, never normal forms.")
    cases = (
        (klein, "b * a", "a * ~b"),
        (klein, "b * a", "a * b"),
        (circle, "a * ~a", "refl"),
    )
    for space, left, right in cases:
        verdict = bfs_rw_eq(
            space, parse_path(space, left), parse_path(space, right)
        )
        fast = normalize(space, parse_path(space, left)) == normalize(
            space, parse_path(space, right)
        )
        print(
            f"  {space.name:7s} {left:8s} vs {right:8s}: "
            f"search says {verdict.kind} after {verdict.explored} states, "
            f"normal forms say {'equal' if fast else 'not equal'}"
        )
        assert verdict.is_equal == fast

    section("Budgets make honesty explicit")
    tight = bfs_rw_eq(
        klein,
        parse_path(klein, "b * a"),
        parse_path(klein, "a * ~b"),
        Budget(max_states=3),
    )
    print(f"  with 3 states allowed: {tight.kind}")
    assert not tight.is_decided

    section("A term's whole neighborhood, enumerated")
    seen, complete = explore_class(
        circle, parse_path(circle, "a * ~a"), Budget(max_states=50_000)
    )
    print(
        f"  {len(seen)} terms are reachable from a * ~a within the size cap"
        f" (complete: {complete})"
    )
    shortest = min(seen, key=lambda t: len(render_path(circle, t)))
    print(f"  the smallest is, of course: {render_path(circle, shortest)}")

    print()
    print("Two independent deciders, one answer, receipts on request.")


if __name__ == "__main__":
    main()
