use qdissect_core::verify::{catalog, verify, Backend};

fn main() {
    let order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    for rec in catalog() {
        let t = std::time::Instant::now();
        let r = verify(rec, Some(order), Backend::Residue);
        println!("{:<14} {:?} {:?} {:?} {:.2?}", r.id, r.status, r.first_mismatch, r.error, t.elapsed());
        if let Some(v) = rec.as_verbatim() {
            let r = verify(&v, Some(order), Backend::Residue);
            println!("  printed      {:?} {:?}", r.status, r.first_mismatch.map(|m| m.exponent));
        }
    }
}
