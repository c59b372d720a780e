#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::lab::ConjectureReport;

fuzz_target!(|data: &[u8]| {
    let Ok(r) = serde_json::from_slice::<ConjectureReport>(data) else {
        return;
    };
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<ConjectureReport>(&json).unwrap(), r);
});
