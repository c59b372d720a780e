#![no_main]

use libfuzzer_sys::fuzz_target;
use skolem_xray::ds::birkhoff_decompose;
use skolem_xray::parse::parse_ds_matrix;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(d) = parse_ds_matrix(s) else { return };
    assert_eq!(
        parse_ds_matrix(&serde_json::to_string(&d).unwrap()).unwrap(),
        d
    );
    if d.order() <= 8 {
        let dec = birkhoff_decompose(&d).unwrap();
        assert_eq!(dec.reconstruct(), d.rows());
    }
});
