//! Growth series and growth rates of Coxeter groups, with the hyperbolic
//! geometry needed to recognise compact Coxeter polyhedra.

pub mod diagram;
pub mod fixtures;
pub mod geometry;
pub mod graph;
pub mod growth;
pub mod order;
pub mod poly;
pub mod roots;

pub use diagram::{
    classify_connected, enumerate_elliptic_subsets, is_elliptic, DiagramError, DiagramKind,
    DiagramType, EllipticSubset, Family,
};
pub use geometry::{
    compactness_check, gram_matrix, has_hyperbolic_signature, interval_signature, signature,
    solve_prism_length, Compactness, GeometryError, GramMatrix, Interval, PrismLength,
    SignatureResult, DEFAULT_PRECISION_BITS,
};
pub use graph::{
    parse_coxeter_symbol, parse_graph_file, serialize_graph, symbol_to_graph, validate_graph,
    CoshDistance, CoxeterMatrix, CoxeterSymbol, EdgeLabel, GraphDiagnostics, GraphError, Order,
    VinbergGraph,
};
pub use growth::{
    euler_characteristic, growth_series, reciprocity_type, series_coefficients, steinberg_sum,
    EulerCharacteristic, GrowthError, GrowthSeries, Reciprocity,
};
pub use fixtures::{fixture, fixture_graph, Fixture, Realisation, FIXTURES};
pub use order::{
    assert_growth_monotone, find_embedding, help_function, matches_printed, minimality_report, Check,
    MinimalityReport, MonotoneCheck, NamedRate, OrderError, PartialOrderWitness, Rate, ReportStep,
};
pub use poly::{IntPolynomial, PolyError, RationalFunction};
pub use roots::{classify_number, format_decimal, format_enclosure, growth_rate, is_self_reciprocal, isolate_real_roots, strip_cyclotomic, sturm_count, Certification, GrowthRate, IsolatedRoot, NumberClass, RootError, SelfReciprocity, Verdict};
