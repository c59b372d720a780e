#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_order_range;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(r) = parse_order_range(s) else { return };
    assert!(*r.start() >= 1 && r.start() <= r.end());
    let again = parse_order_range(&format!("{}..={}", r.start(), r.end())).unwrap();
    assert_eq!(again, r);
});
