#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::gluing::identify;
use petrisem::io::{parse_net, parse_witness};

const NET: &str = r#"{"places": ["A", "B", "C"], "transitions": [{"name": "f", "pre": {"A": 1}, "post": {"B": 1}}, {"name": "g", "pre": {"A": 1}, "post": {"C": 1}}], "semantics": {"backend": "terminal"}}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let nets = parse_net(NET).unwrap();
    if let Ok(w) = parse_witness(text, nets.presentation()) {
        // any well-formed witness either quotients or reports why not
        let _ = identify(&nets, &w);
    }
});
