//! The Clifford pipeline on Z2^0 x 2chain: retraction onto idempotents,
//! component homomorphisms, padded groups and the certificate.

use hypersemigroup::catalog;
use hypersemigroup::clifford::{
    diagonal_embedding, embed_clifford, pad_groups, union_tighten, verify_certificate, CliffordDecomposition,
    EmbeddingCertificate,
};
use hypersemigroup::constructions::direct_product;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = direct_product(&[&catalog::z2_zero(), &catalog::two_chain()])?;
    println!("S = Z2^0 x 2chain, {} elements, {}", s.len(), s.class_flags());

    let dec = CliffordDecomposition::new(&s)?;
    for x in s.elements() {
        println!("  pi({}) = {}", s.label(x), s.label(dec.pi(x)));
    }
    let (product, diag) = diagonal_embedding(&s, &dec)?;
    println!(
        "diagonal into a product of {} elements: embedding={}",
        product.len(),
        diag.is_embedding()
    );
    for pad in pad_groups(&s, &dec)? {
        println!("  factor at {}: {}", s.label(pad.idempotent), pad.descriptor());
    }

    let cert = embed_clifford(&s)?;
    println!("target group order {}", cert.target_order());
    let text = cert.to_text();
    print!("{text}");
    println!("verification: {}", verify_certificate(&cert)?);
    println!("images span {}", union_tighten(&cert)?);

    let reparsed = EmbeddingCertificate::parse(&text, &s)?;
    println!(
        "reparsed certificate verifies: {}",
        verify_certificate(&reparsed)?.passed()
    );
    Ok(())
}
