#![no_main]

use affine_semigroup::format::SemigroupFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = SemigroupFile::from_json(text) else {
        return;
    };
    let again = SemigroupFile::from_json(&f.to_json()).expect("serialized files parse");
    assert_eq!(again, f);
});
