#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_multiset;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(a) = parse_multiset(s) else { return };
    assert!(a.diffs().windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(parse_multiset(&a.to_string()).unwrap(), a);
    assert_eq!(
        parse_multiset(&serde_json::to_string(&a).unwrap()).unwrap(),
        a
    );
});
