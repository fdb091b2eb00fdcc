#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::io::{export_dot, parse_net, serialize_net};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(nets) = parse_net(text) {
        let out = serialize_net(&nets);
        let again = parse_net(&out).expect("serialized documents parse");
        assert_eq!(serialize_net(&again), out);
        let _ = export_dot(nets.net(), Some(nets.fold()));
    }
});
