#!/usr/bin/env python3
"""Smoke test for the dblcheck Python extension.

Build the extension first:

    cargo build -p dblcheck-py --release

The script locates the built cdylib, exposes it as an importable module,
and exercises the finite-set primitives, companion search, and the check
and lift suites.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_library() -> pathlib.Path:
    names = ["libdblcheck.so", "libdblcheck.dylib", "dblcheck.dll"]
    for profile in ("release", "debug"):
        for name in names:
            cand = ROOT / "target" / profile / name
            if cand.exists():
                return cand
    sys.exit("build the extension first: cargo build -p dblcheck-py --release")


def import_module():
    lib = locate_library()
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="dblcheck-py-"))
    suffix = ".so" if lib.suffix in (".so", ".dylib") else ".pyd"
    shutil.copy(lib, tmp / f"dblcheck{suffix}")
    sys.path.insert(0, str(tmp))
    import dblcheck  # noqa: E402

    return dblcheck


def main() -> None:
    db = import_module()

    # finite-set primitives
    two = db.FinSet(["0", "1"])
    one = db.FinSet(["0"])
    assert len(two) == 2 and two.elements() == ["0", "1"]
    f = db.FinFunction(two, one, [0, 0])
    g = db.FinFunction(one, two, [1])
    gf = db.compose(g, f)
    assert gf.table() == [1, 1]

    apex, p, q = db.pullback(f, f)
    assert len(apex) == 4, "2x2 agreeing pairs over a point"
    assert not p.is_bijection()

    h = db.FinFunction(one, two, [0])
    k = db.FinFunction(one, two, [1])
    quotient, proj = db.coequalizer(h, k)
    assert len(quotient) == 1 and proj.table() == [0, 0]

    # every function has a graph-span companion
    assert db.span_companion_count(f, 2) >= 1

    # presentation round-trip
    text = ROOT.joinpath("fixtures", "squares_z2.dcat").read_text()
    printed = db.parse_presentation(text)
    assert db.parse_presentation(printed) == printed

    # the double-category and companion suites on the span instance
    code, report = db.check("span", size=2, checks=["double", "companions"])
    assert code == 0, json.dumps(report, indent=2)
    names = {c["name"] for c in report["checks"]}
    assert "dbl.pentagon" in names and "companions.exist" in names

    # the lifting suite with the bundled pentagon fixture
    code, report = db.lift(
        "span", size=2, fixtures=[str(ROOT / "fixtures" / "pent.fix")]
    )
    assert code == 0, json.dumps(report, indent=2)
    fixture_checks = [c for c in report["checks"] if c["name"].startswith("fixtures@")]
    assert fixture_checks and all(c["status"] == "pass" for c in fixture_checks)

    print("dblcheck python smoke test: all assertions passed")


if __name__ == "__main__":
    main()
