//! Equal-modulus, equal-conjugate and sign decisions against the naive
//! 200-digit oracle.

mod common;

use common::oracle::{elements, oracle_equal_conjugates, oracle_equal_modulus, oracle_totally_positive};
use equimod::units::{is_equal_conjugates, is_equal_modulus, is_totally_positive};

#[test]
fn decisions_agree_with_naive_oracle() {
    let corpus = elements();
    assert!(corpus.len() >= 50, "corpus has {} elements", corpus.len());
    let (mut trues, mut falses) = (0, 0);
    for (k, a) in &corpus {
        let want = oracle_equal_modulus(k, a);
        assert_eq!(is_equal_modulus(a).unwrap().value, want, "equal modulus of {a} in {}", k.defining_poly());
        if want {
            trues += 1;
        } else {
            falses += 1;
        }
        let want = oracle_equal_conjugates(k, a);
        assert_eq!(is_equal_conjugates(a).unwrap().value, want, "equal conjugates of {a} in {}", k.defining_poly());
        let want = oracle_totally_positive(k, a);
        assert_eq!(is_totally_positive(a).unwrap().value, want, "positivity of {a} in {}", k.defining_poly());
    }
    assert!(trues >= 5 && falses >= 5, "{trues} equal, {falses} unequal");
}
