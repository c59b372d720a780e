#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_pairing;
use skolem_xray::skolem::{pairing_to_sequence, sequence_to_pairing};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = parse_pairing(s) else { return };
    assert_eq!(
        parse_pairing(&serde_json::to_string(&p).unwrap()).unwrap(),
        p
    );
    let seq = pairing_to_sequence(&p);
    assert_eq!(sequence_to_pairing(seq.symbols()).unwrap(), p);
});
