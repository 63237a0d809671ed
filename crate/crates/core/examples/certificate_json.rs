use chidelta::certificate::{
    deserialize_certificate, serialize_certificate, verify_certificate, Certificate,
};
use chidelta::graph::Graph;

fn main() {
    let g = Graph::cycle_power(16, 2).unwrap();
    let cert = Certificate::HighOddHole {
        cycle: vec![1, 3, 4, 6, 7, 9, 11, 13, 15],
    };
    let json = serialize_certificate(&cert);
    println!("{json}");
    let back = deserialize_certificate(&json).unwrap();
    println!(
        "round trip ok: {}, verdict: {:?}",
        back == cert,
        verify_certificate(&g, &back)
    );

    let tampered = Certificate::HighOddHole {
        cycle: vec![1, 3, 5, 6, 7, 9, 11, 13, 15],
    };
    println!("tampered: {:?}", verify_certificate(&g, &tampered));

    for bad in [
        r#"{"kind":"star","center":0}"#,
        r#"{"kind":"clique","vertices":[0,-1]}"#,
    ] {
        println!("{bad}: {}", deserialize_certificate(bad).unwrap_err());
    }
}
