#[test]
fn diagram_instance_counts() {
    use dblcheck_core::dbl::UniverseCaps;
    use dblcheck_core::instances::span::{span_universe, SpanDbl};
    use dblcheck_core::mondbl::{check_monoidal_double_category, Level};
    let d = SpanDbl;
    let u = span_universe(&d, 2, UniverseCaps::default());
    let r = check_monoidal_double_category(&d, &u, Level::Symmetric, None).unwrap();
    for c in &r.checks {
        println!("{}: {} instances, {} failures", c.name, c.instances, c.failures);
        assert!(c.instances > 0, "vacuous check {}", c.name);
    }
}
