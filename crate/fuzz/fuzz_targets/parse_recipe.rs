#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::gluing::synchronize_transitions_bounded;
use petrisem::io::{parse_net, parse_recipe};

const NET: &str = r#"{"places": ["A", "B", "C"], "transitions": [{"name": "f", "pre": {"A": 1}, "post": {"B": 1}}, {"name": "g", "pre": {"B": 1}, "post": {"C": 1}}], "semantics": {"backend": "terminal"}}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(recipe) = parse_recipe(text) {
        let nets = parse_net(NET).unwrap();
        let _ = synchronize_transitions_bounded(&nets, &recipe, 1);
    }
});
