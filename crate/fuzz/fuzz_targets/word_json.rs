#![no_main]

use barhom::group_alg::{ConcreteGroup, EntryCodec, EntryEncode, WordAlgebra};
use libfuzzer_sys::fuzz_target;
use serde_json::Value;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<Value>(data) else {
        return;
    };
    let alg = WordAlgebra::new(ConcreteGroup::cyclic(3), 3);
    if let Ok(w) = alg.decode(&v) {
        assert_eq!(
            alg.decode(&alg.encode(&w))
                .expect("re-encoded word decodes"),
            w
        );
    }
});
