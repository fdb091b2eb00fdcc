#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::free_smc;
use petrisem::io::parse_petri_net;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(net) = parse_petri_net(text) {
            let _ = free_smc(&net);
        }
    }
});
