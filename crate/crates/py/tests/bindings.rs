use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn with_module(code: &std::ffi::CStr) {
    Python::initialize();
    Python::attach(|py| {
        let m = wrap_pymodule!(pyteich0::pyteich0)(py);
        let locals = PyDict::new(py);
        locals.set_item("t", m).unwrap();
        py.run(code, None, Some(&locals)).map_err(|e| e.display(py)).unwrap();
    });
}

#[test]
fn braids_from_python() {
    with_module(
        c"
a = t.Braid(3, [(1, 1), (2, 1), (1, 1)])
b = t.Braid(3, [(2, 1), (1, 1), (2, 1)])
assert a == b
assert a.perm() == [3, 2, 1]
assert a.to_dict() == {'strands': 3, 'letters': [[1, 1], [2, 1], [1, 1]]}
try:
    t.Braid(3, [(3, 1)])
    raise AssertionError('accepted a bad letter')
except ValueError:
    pass
",
    );
}

#[test]
fn associators_and_gt_from_python() {
    with_module(
        c"
a = t.Associator.solve(3, '1')
assert a.is_valid() and a.mu == '1' and a.degree == 3
e = t.GtElement.solve('-1/2', 3, 1)
assert e.check()['valid']
assert e.act(a).mu == '-1/2'
assert t.GtElement.discrete(-1).check()['valid']
",
    );
}

#[test]
fn verification_from_python() {
    with_module(
        c"
ok, text = t.verify('lie', 2, '1', 4)
assert ok, text
assert text.startswith('seed=4 N=2 mu=1')
",
    );
}
