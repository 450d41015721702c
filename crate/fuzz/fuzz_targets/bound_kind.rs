#![no_main]

use barhom::bounds::{rho_bound, BoundKind, BoundParams};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(kind) = text.parse::<BoundKind>() {
        assert_eq!(kind.to_string(), text);
        rho_bound(kind, &BoundParams::default()).expect("default parameters are valid");
    }
});
