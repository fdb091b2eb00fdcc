#![no_main]

use libfuzzer_sys::fuzz_target;
use petrisem::io::parse_term;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(term) = parse_term(text) {
        // printing is the inverse of parsing
        let again = parse_term(&term.to_string()).expect("printed terms parse");
        assert_eq!(again, term);
    }
});
