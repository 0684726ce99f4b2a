from multiprocessing import cpu_count
from os import getenv as env

from regret_games import log, settings

config = settings.get_config()

# The socket to bind.
bind = env("GUNICORN_BIND", "0.0.0.0:8080")

# One worker process per core; each has its own solver thread pool.
workers = int(env("GUNICORN_WORKERS", cpu_count()))

worker_class = env("GUNICORN_WORKER_CLASS", "uvicorn.workers.UvicornWorker")

# Requests a worker serves before it is restarted.
max_requests = int(env("GUNICORN_MAX_REQUESTS", 256))
max_requests_jitter = int(env("GUNICORN_MAX_REQUESTS_JITTER", 32))

# Seconds a silent worker may run before it is killed.
timeout = int(env("GUNICORN_TIMEOUT", 600))
graceful_timeout = int(env("GUNICORN_GRACEFUL_TIMEOUT", 30))
keepalive = int(env("GUNICORN_KEEPALIVE", 5))

proc_name = env("GUNICORN_PROC_NAME", config.service_name)

accesslog = env("GUNICORN_ACCESS_LOG", "-")
errorlog = env("GUNICORN_ERRORLOG", "-")
loglevel = env("GUNICORN_LOGLEVEL", config.log_config.level)
logconfig_dict = log.get_config(config)

# Header limits; arena and automaton documents go in the body.
limit_request_line = int(env("GUNICORN_LIMIT_REQUEST_LINE", 4094))
limit_request_fields = int(env("GUNICORN_LIMIT_REQUEST_FIELDS", 64))

preload_app = env("GUNICORN_PRELOAD_APP", "false").lower() == "true"

forwarded_allow_ips = env("GUNICORN_FORWARDER_ALLOW_IPS", "127.0.0.1")
