from regret_games.models.common import Error, ErrorResponse

unprocessable_entity = {
    "model": ErrorResponse,
    "description": "Error: Unprocessable Entity",
    "content": {
        "application/json": {
            "example": ErrorResponse(
                errors=[
                    Error(
                        error_key="parse.syntax",
                        error_message="line 3: unknown vertex 'v9'",
                        error_loc=["line", 3],
                    ),
                    Error(
                        error_key="request.undecidable",
                        error_message=(
                            "Regret against word strategies is undecidable "
                            "for mean-payoff; pass a memory bound"
                        ),
                        error_loc=None,
                    ),
                ],
            ),
        },
    },
}


budget_exceeded = {
    "model": ErrorResponse,
    "description": "Error: Search budget exhausted",
    "content": {
        "application/json": {
            "example": ErrorResponse(
                errors=[
                    Error(
                        error_key="budget.exceeded",
                        error_message=(
                            "Budget of 200000 nodes exceeded in search"
                        ),
                        error_loc=None,
                    ),
                ],
            ),
        },
    },
}
