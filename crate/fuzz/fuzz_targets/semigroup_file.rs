#![no_main]

use affine_semigroup::format::SemigroupFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(f) = SemigroupFile::from_json(data) {
        // Small budget: a fuzz input must not turn into a long search.
        let _ = f.gap_semigroup(16);
    }
});
