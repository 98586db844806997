use pyo3::ffi::c_str;
use pyo3::prelude::*;

use cutwidth_py::cutwidth_py;

fn run(code: &std::ffi::CStr) {
    pyo3::append_to_inittab!(cutwidth_py);
    Python::initialize();
    Python::attach(|py| {
        if let Err(e) = py.run(code, None, None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn module_round_trip() {
    run(c_str!(
        r#"
import cutwidth_py as cw

g, classes = cw.gen_lower_g(2, 3)
assert classes == [[1], [5], [2, 3, 4]]
assert cw.exact_cutwidth(g)[0] == 6
cert = cw.compose_theorem(g, classes)
assert (cert.x, cert.y, cert.achieved, cert.bound_doubled) == (2, 3, 6, 12)
assert cw.ordering_cutwidth(g, cert.ordering) == cert.achieved
assert cw.compose_simple(g, classes).bound_doubled == 14
assert cw.Multigraph.parse(g.serialize()) == g

h = cw.gen_lower_h(2, 3)
assert h.directed and h.vertex_count == 15
assert max(len(c) for c in cw.scc_partition(h)) == 9
cond, _ = cw.condensation(h)
assert cw.exact_cutwidth(cond)[0] == 2

try:
    cw.exact_cutwidth(h, budget=10)
    raise AssertionError("budget not enforced")
except cw.BudgetExceededError:
    pass
try:
    cw.gen_lower_g(3, 1)
    raise AssertionError("odd x accepted")
except ValueError:
    pass
"#
    ));
}
