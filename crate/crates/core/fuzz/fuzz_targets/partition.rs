#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = twotrans::parse_partition(text) {
        let again = twotrans::parse_partition(&p.to_partition_file()).unwrap();
        assert_eq!(again, p);
    }
});
