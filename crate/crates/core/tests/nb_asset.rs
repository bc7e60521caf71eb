mod common;

use dilations::families::{derive_g2nb_candidates, NbList};

#[test]
fn shipped_candidates_regenerate() {
    let shipped = NbList::shipped();
    let derived = derive_g2nb_candidates(shipped.max_n).unwrap();
    assert_eq!(derived.max_n, shipped.max_n);
    assert_eq!(derived.graphs.len(), shipped.graphs.len());
    for (d, s) in derived.graphs.iter().zip(&shipped.graphs) {
        assert!(
            common::brute_isomorphic(d, s),
            "{:?} vs {:?}",
            d.edges(),
            s.edges()
        );
    }
    assert_eq!(derived.to_text(), shipped.to_text());
}

#[test]
fn candidate_text_round_trips() {
    let shipped = NbList::shipped();
    assert_eq!(NbList::parse(&shipped.to_text()).unwrap(), shipped);
    assert!(NbList::parse("Bw\n").is_err());
}
