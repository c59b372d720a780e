#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_sequence;
use skolem_xray::skolem::pairing_to_sequence;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(seq) = parse_sequence(s) else { return };
    assert_eq!(pairing_to_sequence(&seq.to_pairing()), seq);
    assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
});
