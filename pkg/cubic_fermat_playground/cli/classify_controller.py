from cubic_fermat_playground.cli.output import classification_document
from cubic_fermat_playground.fermat.pipeline import classify_parameters


class ClassifyController:
    def render(self, d: int, k: int) -> dict:
        return classification_document(classify_parameters(d, k))
