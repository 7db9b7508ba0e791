"""
Extensions for supercount: the Redis connection and the task queue that batch
sweeps hand their rows to.
"""
import time
import typing as t

from fakeredis import FakeStrictRedis
from redis import Redis
from rq import Queue
from rq.job import Job

from .exceptions import SuperCountError

QUEUE_NAME = "supercount"


class RedisClient:
    """Wrapper for a Redis client.

    Args:
        redis_url (:obj:`str`, optional): The Redis connection string.
            Ex: "redis://localhost:6379/0". Defaults to None.
        test_mode (:obj:`bool`, optional): Whether the redis client should be
            in test mode. Defaults to False.
    """

    def __init__(
        self, redis_url: t.Optional[str] = None, test_mode: bool = False
    ) -> None:
        self._client: t.Optional[Redis] = None
        if redis_url or test_mode:
            self.init_redis(redis_url, test_mode)

    def init_redis(self, redis_url: t.Optional[str], test_mode: bool = False) -> None:
        """Initializes the Redis client with the given connection string.

        Without a connection string the client is an in-process fake, so a single
        machine sweep needs no Redis server.

        Args:
            redis_url (:obj:`str`, optional): The Redis connection string.
            test_mode (:obj:`bool`, optional): Whether the redis client should
                be in test mode. Defaults to False.
        """
        if test_mode or not redis_url:
            self._client = FakeStrictRedis()
        else:
            self._client = Redis.from_url(redis_url)

    @property
    def client(self) -> Redis:
        """Returns the Redis client this wrapper contains.

        Raises:
            :obj:`AttributeError`: If the Redis client hasn't been initialized yet.

        Returns:
            :obj:`~redis.Redis`: The Redis object.
        """
        if not self._client:
            raise AttributeError("Redis Client was not assigned yet!")
        return self._client


class RQ:
    """Wrapper for a Redis Queue.

    The Queue will have the name "supercount". A synchronous queue runs every job
    as it is enqueued.

    Args:
        client (:obj:`~redis.Redis`, optional): The Redis client. Defaults to None.
        synchronous (:obj:`bool`, optional): Whether jobs run in-process.
            Defaults to False.
    """

    def __init__(
        self, client: t.Optional[Redis] = None, synchronous: bool = False
    ) -> None:
        self._queue: t.Optional[Queue] = None
        self._synchronous = synchronous
        if client:
            self.init_queue(client, synchronous)

    def init_queue(self, client: Redis, synchronous: bool = False) -> None:
        """Initializes the Redis Queue with the given Redis client and a queue name
        of "supercount".

        Args:
            client (:obj:`~redis.Redis`): The Redis client.
            synchronous (:obj:`bool`, optional): Whether jobs run in-process.
                Defaults to False.
        """
        self._synchronous = synchronous
        if synchronous:
            self._queue = Queue(QUEUE_NAME, is_async=False, connection=client)
        else:
            self._queue = Queue(QUEUE_NAME, connection=client)

    @property
    def queue(self) -> Queue:
        """Returns the Redis Queue this wrapper contains.

        Raises:
            :obj:`AttributeError`: If the Redis Queue hasn't been initialized with a
                Redis client.

        Returns:
            :obj:`~rq.Queue`: The Redis Queue object.
        """
        if not self._queue:
            raise AttributeError("RQ Queue was not assigned yet!")
        return self._queue

    @property
    def synchronous(self) -> bool:
        return self._synchronous

    def add_job(self, job: t.Callable, *args, **kwargs) -> Job:
        """Enqueues a job to the Redis Queue this wrapper contains.

        Args:
            job (:obj:`Callable`): The job function.
            *args: Any arguments to pass to the job function.
            **kwargs: Any keyword arguments to pass to the job function.

        Raises:
            :obj:`AttributeError`: If the Redis Queue hasn't been initialized with a
                Redis client.

        Returns:
            :obj:`~rq.job.Job`: The enqueued job.
        """
        queued_job: Job = self.queue.enqueue(job, *args, **kwargs)
        return queued_job

    def get_job(self, job_id: str) -> t.Optional[Job]:
        """Returns a job from the Redis Queue this wrapper contains.

        Args:
            job_id (:obj:`str`): Id of the job.

        Returns:
            :obj:`~rq.job.Job` | ``None``: The job, or None if a job with the given
                id does not exist.
        """
        job: t.Optional[Job] = self.queue.fetch_job(job_id)
        return job

    def wait_for(self, job: Job, poll_interval: float = 0.05) -> t.Any:
        """Blocks until a job has finished and returns its result.

        Args:
            job (:obj:`~rq.job.Job`): The job.
            poll_interval (:obj:`float`, optional): Seconds between status checks.

        Raises:
            :obj:`~supercount.exceptions.SuperCountError`: If the job failed on a
                worker.

        Returns:
            The job's return value.
        """
        while True:
            status = job.get_status(refresh=True)
            if status == "finished":
                return job.result
            if status in ("failed", "stopped", "canceled"):
                raise SuperCountError(f"job {job.id} ended as {status}: {job.exc_info}")
            time.sleep(poll_interval)


redis_client = RedisClient()
rq_queue = RQ()
