#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(pi) = parse_permutation(s) else { return };
    assert_eq!(parse_permutation(&pi.to_string()).unwrap(), pi);
    assert_eq!(
        parse_permutation(&serde_json::to_string(&pi).unwrap()).unwrap(),
        pi
    );
    assert_eq!(pi.inverse().inverse(), pi);
});
