#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::parse::parse_xray;
use skolem_xray::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(x) = parse_xray(s) else { return };
    assert_eq!(x.len(), 2 * x.order() - 1);
    let total: Rational = x.sums().iter().sum();
    assert_eq!(total, Rational::from_integer(x.order().into()));
    assert_eq!(parse_xray(&x.to_string()).unwrap(), x);
    assert_eq!(parse_xray(&serde_json::to_string(&x).unwrap()).unwrap(), x);
});
