#![no_main]

use barhom::group_alg::{ConcreteGroup, Group};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(group) = text.parse::<ConcreteGroup>() else {
        return;
    };
    if group.order().is_some_and(|n| n <= 64) {
        let e = group.identity();
        for x in group.elements() {
            assert_eq!(group.mul(&x, &group.inv(&x)), e);
            assert_eq!(group.mul(&e, &x), x);
        }
    }
});
