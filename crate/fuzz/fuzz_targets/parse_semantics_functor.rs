#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::io::{parse_net, parse_semantics_functor};
use petrisem::Semantics;

const NET: &str = r#"{"places": ["A", "B"], "transitions": [{"name": "f", "pre": {"A": 1}, "post": {"B": 2}}], "semantics": {"backend": "free", "objects": ["A", "B"], "morphisms": [{"name": "f", "dom": ["A"], "cod": ["B", "B"]}]}, "fold": {"objects": {"A": ["A"], "B": ["B"]}, "morphisms": {"f": "gen(f)"}}}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let nets = parse_net(NET).unwrap();
    let Semantics::Free(sig) = nets.semantics() else {
        unreachable!()
    };
    if let Ok(h) = parse_semantics_functor(text, &sig) {
        let _ = petrisem::semantics::transport(&h, &nets);
    }
});
