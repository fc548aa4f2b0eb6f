//! Slow exhaustive runs. `cargo test --release -- --ignored`

use pathdom::verify::{run_verification, CorpusMode, CorpusSpec, Suite};

#[test]
#[ignore]
fn oracle_equivalence_all_six_vertex_graphs() {
    let spec = CorpusSpec {
        mode: CorpusMode::Exhaustive {
            n_min: 6,
            n_max: 6,
            cap: 6,
        },
        connected_only: false,
    };
    let r = run_verification(
        &spec,
        &[
            Suite::OracleEquivalence,
            Suite::Lemmas,
            Suite::Characterizations,
        ],
    )
    .unwrap();
    assert_eq!(r.corpus_size, 1 << 15);
    assert!(r.pass, "{}", r.table());
}
