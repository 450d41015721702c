#![no_main]

use barhom::group_alg::{ConcreteGroup, EntryCodec, FreeGroup, QuintupleAlgebra};
use barhom::json::{chain_from_json, chain_to_json};
use libfuzzer_sys::fuzz_target;
use serde_json::Value;

fn round_trip<A: EntryCodec>(alg: &A, v: &Value) {
    if let Ok(c) = chain_from_json(alg, v) {
        let again =
            chain_from_json(alg, &chain_to_json(alg, &c)).expect("re-encoded chain decodes");
        assert_eq!(again, c);
    }
}

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<Value>(data) else {
        return;
    };
    round_trip(&ConcreteGroup::cyclic(3), &v);
    round_trip(&"sym3".parse::<ConcreteGroup>().unwrap(), &v);
    round_trip(&FreeGroup::new(3), &v);
    round_trip(&QuintupleAlgebra::new(ConcreteGroup::cyclic(3)), &v);
});
