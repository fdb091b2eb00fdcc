#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::io::{parse_functor, parse_net, serialize_functor};

const SOURCE: &str = r#"{"places": ["A", "B"], "transitions": [{"name": "f", "pre": {"A": 2}, "post": {"B": 1}}], "semantics": {"backend": "terminal"}}"#;
const TARGET: &str = r#"{"places": ["X", "Y", "Z"], "transitions": [{"name": "g", "pre": {"X": 1}, "post": {"Y": 1}}, {"name": "h", "pre": {"X": 1}, "post": {}}], "semantics": {"backend": "terminal"}}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let src = parse_net(SOURCE).unwrap();
    let tgt = parse_net(TARGET).unwrap();
    if let Ok(f) = parse_functor(text, src.presentation(), tgt.presentation()) {
        let again = parse_functor(
            &serialize_functor(&f),
            src.presentation(),
            tgt.presentation(),
        )
        .expect("serialized functors parse");
        assert!(again.equivalent(&f));
    }
});
