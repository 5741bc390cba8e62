import tensorflow as tf

obs_dim = 4
policy_w = tf.Variable(tf.ones([obs_dim, 2]))
state = tf.constant([[0.0, 0.0, 0.0, 0.0]])
for episode in range(50):
    done = False
    while not done:
        logits = tf.matmul(state, policy_w)  # expect: RNC001
        done = True
