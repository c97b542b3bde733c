use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("object `{0}` has no identity morphism")]
    MissingIdentity(String),
    #[error("identity law fails: `{identity}` composed with `{morphism}`")]
    IdentityLaw { identity: String, morphism: String },
    #[error("composite `{g}`∘`{f}` is not defined")]
    UndefinedComposite { g: String, f: String },
    #[error("domain/codomain mismatch: {0}")]
    DomCodMismatch(String),
    #[error("composite `{g}`∘`{f}` is given twice with different values")]
    ConflictingComposite { g: String, f: String },
    #[error("composition is not associative on (`{h}`, `{g}`, `{f}`)")]
    NonAssociative { h: String, g: String, f: String },
    #[error("{count} morphisms exceed the limit of {limit}")]
    TooLarge { count: usize, limit: usize },
    #[error("square does not commute")]
    NotCommutative,
    #[error("cospan legs `{f}` and `{phi}` have different codomains")]
    CodMismatch { f: String, phi: String },
    #[error("index {0} out of range")]
    OutOfRange(usize),
}
