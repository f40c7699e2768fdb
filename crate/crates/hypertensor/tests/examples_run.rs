//! Every example must run to completion.

macro_rules! example_runs {
    ($($name:ident),+ $(,)?) => {
        $(
            mod $name {
                include!(concat!(
                    env!("CARGO_MANIFEST_DIR"),
                    "/examples/",
                    stringify!($name),
                    ".rs"
                ));

                #[test]
                fn runs() {
                    main().expect(concat!(stringify!($name), " example runs"));
                }
            }
        )+
    };
}

example_runs!(
    power_hypergraph,
    spectral_radius,
    quotient_compression,
    equitable_partitions,
    regular_closed_form,
    odd_bipartite_laplacian,
    monotonicity_scan,
    konig_embedding,
    tensor_toolkit,
);
