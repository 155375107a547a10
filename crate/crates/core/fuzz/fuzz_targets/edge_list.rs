#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = twotrans::parse_edge_list(text) {
        assert_eq!(twotrans::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
});
