import tensorflow as tf


class Trainer:
    def __init__(self):
        self.w = tf.Variable([[1.0]])
        self.x = tf.constant([[3.0]])

    def forward(self):
        return tf.matmul(self.x, self.w)  # expect: RNC001

    def fit(self, sess, steps):
        for _ in range(steps):
            sess.run(self.forward())
