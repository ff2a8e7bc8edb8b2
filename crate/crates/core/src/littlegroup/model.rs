use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar};
use crate::holgroup::{eval_word, ConjClasses, Element, Holomorph};

/// Matrices for the generators of `G`, in the order of [`Holomorph::generators`].
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixModel<T> {
    images: Vec<Matrix<T>>,
}

impl<T: Scalar> MatrixModel<T> {
    pub fn new(images: Vec<Matrix<T>>) -> Self {
        assert!(!images.is_empty(), "a model needs at least one generator image");
        MatrixModel { images }
    }

    pub fn dim(&self) -> usize {
        self.images[0].dim()
    }

    pub fn images(&self) -> &[Matrix<T>] {
        &self.images
    }

    /// Image of `g` through its normal-form word.
    pub fn image(&self, group: &Holomorph, g: Element) -> Matrix<T> {
        let one = Matrix::identity(self.dim());
        eval_word(&group.word(g), &self.images, &one, |x, y| x.mul(y))
    }

    /// Checks every defining relation of the presentation.
    pub fn check_relations(&self, group: &Holomorph) -> Result<()> {
        let one = Matrix::identity(self.dim());
        for rel in group.relations() {
            let lhs = eval_word(&rel.lhs, &self.images, &one, |x, y| x.mul(y));
            let rhs = eval_word(&rel.rhs, &self.images, &one, |x, y| x.mul(y));
            if lhs != rhs {
                return Err(Error::Falsified(format!("relation {} fails in the model", rel.label)));
            }
        }
        Ok(())
    }

    /// Trace of the model on each class representative.
    pub fn trace_function(&self, group: &Holomorph, classes: &ConjClasses) -> Vec<T> {
        classes
            .representatives()
            .into_iter()
            .map(|g| self.image(group, g).trace())
            .collect()
    }
}
