//! Build each seed family and print its certificate.

use strongperc::product::parse_expression;
use strongperc::seeds::{self, SeedCertificate};
use strongperc::Graph;

fn show(cert: &SeedCertificate) {
    println!(
        "{:<12} {:<22} r = {:<2} |S| = {:<3} verified = {}",
        format!("{:?}", cert.construction),
        cert.product,
        cert.r,
        cert.seed.len(),
        cert.verified
    );
    if let Some(note) = &cert.note {
        println!("             note: {note}");
    }
}

fn main() -> strongperc::Result<()> {
    let spec = parse_expression("P4 x C5 x K2", None)?;
    for r in 1..=4 {
        show(&seeds::seed_corner(&spec, r)?);
    }
    show(&seeds::seed_cycle_clique(7, 3)?);
    show(&seeds::seed_two_big(&parse_expression("P3 x C4 x K2", None)?, 6)?);
    show(&seeds::seed_three_big(&parse_expression("P3 x P3 x C5", None)?)?);
    show(&seeds::seed_all_big(&parse_expression("P3 x P3 x P3 x P3", None)?)?);

    let (g, h) = (Graph::parse_named("C3")?, Graph::parse_named("P3")?);
    show(&seeds::seed_two_factor_r4(&g, &h)?);
    show(&seeds::seed_two_factor_r5(&g, &h)?);

    match seeds::seed_prism3(&Graph::parse_named("S3")?)? {
        Some(cert) => {
            show(&cert);
            println!("             coordinates {:?}", cert.coordinates);
        }
        None => println!("no 3-element seed for the prism"),
    }
    Ok(())
}
