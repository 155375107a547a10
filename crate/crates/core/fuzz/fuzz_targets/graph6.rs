#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = twotrans::parse_graph6(data) {
        let text = twotrans::emit_graph6(&g);
        assert_eq!(twotrans::parse_graph6(text.as_bytes()).unwrap(), g);
    }
});
