"""Development server; production runs gunicorn with gunicorn.config.py."""

import os

import uvicorn

from regret_games.api.app import create_app
from regret_games.settings import get_config

config = get_config()
app = create_app(config)


if __name__ == "__main__":
    uvicorn.run(
        app,
        host=os.getenv("HOST", "127.0.0.1"),
        port=int(os.getenv("PORT", "8080")),
        # create_app has already applied the service logging config
        log_config=None,
    )
