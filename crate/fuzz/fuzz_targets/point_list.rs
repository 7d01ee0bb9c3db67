#![no_main]

use affine_semigroup::format::{parse_point, parse_point_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_point(data) {
        assert!(p.coords().iter().all(|&c| c >= 0));
    }
    if let Ok(list) = parse_point_list(data) {
        assert!(!list.is_empty());
        assert!(list.iter().all(|p| p.dim() == list[0].dim()));
    }
});
